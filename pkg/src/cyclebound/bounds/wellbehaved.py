"""Well-behaved triple test."""

from __future__ import annotations

from typing import Optional

from . import expr as X
from .certreal import Outcome
from .functions import _check_f


def well_behaved_sides(k: int, n: int, l: int) -> tuple[X.Expr, X.Expr]:
    """``(f(k,n,l), l*(alpha(n) - alpha(k)))``."""
    _check_f(k, n, l)
    return X.f(k, n, l), X.Const(l) * (X.alpha(n) - X.alpha(k))


def is_well_behaved(k: int, n: int, l: int, prec: Optional[int] = None, max_prec: Optional[int] = None) -> Outcome:
    """TRUE if ``f(k,n,l) >= l(alpha(n) - alpha(k))`` is certified, FALSE if the strict
    reverse is certified, UNDECIDED otherwise.

    For ``l = 1`` and ``n = k`` both sides cancel exactly (the lambda terms are
    identical atoms), so ``(k, k, 1)`` resolves to TRUE without intervals.
    """
    lhs, rhs = well_behaved_sides(k, n, l)
    return X.certify(lhs, ">=", rhs, prec, max_prec).outcome
