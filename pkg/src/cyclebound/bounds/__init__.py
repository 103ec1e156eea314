"""Certified evaluation of the degree-sequence bound functions."""

from .certreal import (
    DEFAULT_PREC,
    MAX_PREC,
    CertReal,
    Outcome,
    certified_ge,
    certified_gt,
    certified_le,
    certified_lt,
    compare,
    render_down,
    render_up,
)
from .exact import Exact
from .expr import Expr, Verdict, certify, overlap
from .functions import *  # noqa: F401,F403
from .functions import __all__ as _function_names
from .wellbehaved import is_well_behaved

__all__ = [
    "DEFAULT_PREC",
    "MAX_PREC",
    "CertReal",
    "Exact",
    "Expr",
    "Outcome",
    "Verdict",
    "certified_ge",
    "certified_gt",
    "certified_le",
    "certified_lt",
    "certify",
    "compare",
    "is_well_behaved",
    "overlap",
    "render_down",
    "render_up",
    *_function_names,
]
