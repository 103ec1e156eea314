"""Shared plumbing for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from ..bounds import expr as X
from ..bounds.certreal import MAX_PREC, CertReal, Outcome
from ..bounds.expr import Verdict, default_prec
from .report import ClaimBuilder, ClaimOutcome

#: Identifier recorded in reports for the sampling generator.
RNG_ALGORITHM = "numpy.random.PCG64"


def rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class Precision:
    """Starting precision and escalation cap for one run."""

    prec: int
    max_prec: int

    @classmethod
    def resolve(cls, prec: Optional[int] = None, max_prec: Optional[int] = None) -> "Precision":
        p = prec or default_prec()
        return cls(p, max_prec if max_prec is not None else max(p, MAX_PREC))


def slack(v: Verdict, rel: str) -> Optional[CertReal]:
    """Certified slack of a verdict: positive when the relation holds.

    Exact decisions with a rational difference report that difference.
    """
    ex = _exact_slack(v, rel)
    if ex is not None:
        return ex
    if v.margin is None:
        return None
    return -v.margin if rel in ("<", "<=") else v.margin


def check(
    builder: ClaimBuilder,
    P: Precision,
    lhs,
    rel: str,
    rhs,
    witness: Any = None,
) -> Verdict:
    v = X.certify(lhs, rel, rhs, P.prec, P.max_prec)
    builder.add(v, witness, slack(v, rel))
    return v


def _exact_slack(v: Verdict, rel: str) -> Optional[CertReal]:
    if v.exact and v.exact_margin is not None:
        m = CertReal.exact(v.exact_margin, v.prec)
        return -m if rel in ("<", "<=") else m
    return None


def check_false(builder: ClaimBuilder, P: Precision, lhs, rel: str, rhs, witness: Any = None) -> Verdict:
    """Record a claim that ``lhs rel rhs`` does *not* hold."""
    v = X.certify(lhs, rel, rhs, P.prec, P.max_prec)
    flipped = {Outcome.TRUE: ClaimOutcome.FAILED, Outcome.FALSE: ClaimOutcome.CERTIFIED, Outcome.UNDECIDED: ClaimOutcome.UNDECIDED}[v.outcome]
    m = slack(v, rel)
    builder.add_outcome(flipped, v.prec, None if m is None else -m, witness, v.exact)
    return v


def check_overlap(builder: ClaimBuilder, P: Precision, lhs, rhs, witness: Any = None) -> bool:
    """Consistency claim: the two enclosures at the starting precision meet."""
    ok, x, y = X.overlap(lhs, rhs, P.prec)
    builder.add_outcome(ClaimOutcome.CERTIFIED if ok else ClaimOutcome.FAILED, P.prec, x - y, witness)
    return ok


def check_bool(builder: ClaimBuilder, ok: bool, witness: Any = None, prec: int = 0) -> None:
    """Exact (integer or combinatorial) fact."""
    builder.add_outcome(ClaimOutcome.CERTIFIED if ok else ClaimOutcome.FAILED, prec, None, witness, exact=True)
