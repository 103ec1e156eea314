"""Aggregate run over all suites."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..bounds.certreal import MAX_PREC
from . import analytic as A
from .graphs import suite_graph_theorems
from .report import ClaimOutcome, VerificationReport

SUITE_NAMES = ("constants", "monotonicity", "funnelweight", "wellbehaved", "lcases", "inequalities", "graph_theorems")


@dataclass
class VerifyConfig:
    """Parameters for :func:`run_full_certification`.

    ``prec=None`` starts at the default precision (``CYCLEBOUND_PREC`` or 128)
    and escalates to 1024 bits.  An explicit ``prec`` is a fixed precision
    unless ``max_prec`` is also given.
    """

    K: int = 64
    L: int = 40
    n_max: int = 6
    samples: int = 10_000
    graph_samples: int = 1000
    seed: int = 0
    prec: Optional[int] = None
    max_prec: Optional[int] = None
    output: Optional[str] = None
    suites: tuple[str, ...] = SUITE_NAMES

    def precision(self) -> tuple[Optional[int], int]:
        if self.max_prec is not None:
            return self.prec, self.max_prec
        return self.prec, MAX_PREC if self.prec is None else self.prec


def suite_runners(cfg: VerifyConfig) -> dict[str, Callable[[], VerificationReport]]:
    prec, cap = cfg.precision()
    return {
        "constants": lambda: A.suite_constants(prec, cap),
        "monotonicity": lambda: A.suite_monotonicity(cfg.K, prec, cap),
        "funnelweight": lambda: A.suite_funnelweight(cfg.L, prec, cap),
        "wellbehaved": lambda: A.suite_wellbehaved(prec, cap),
        "lcases": lambda: A.suite_lcases(prec, cap),
        "inequalities": lambda: A.suite_inequalities(cfg.seed, cfg.samples, prec, cap),
        "graph_theorems": lambda: suite_graph_theorems(cfg.n_max, cfg.graph_samples, cfg.seed, prec, cap),
    }


def run_full_certification(cfg: Optional[VerifyConfig] = None) -> VerificationReport:
    cfg = cfg or VerifyConfig()
    unknown = [s for s in cfg.suites if s not in SUITE_NAMES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    prec, cap = cfg.precision()
    runners = suite_runners(cfg)
    start = time.perf_counter()
    agg = VerificationReport(
        "all" if tuple(cfg.suites) == SUITE_NAMES else "+".join(cfg.suites),
        params={"K": cfg.K, "L": cfg.L, "n_max": cfg.n_max, "samples": cfg.samples,
                "graph_samples": cfg.graph_samples, "prec": prec, "max_prec": cap},
        seed=cfg.seed,
        notes=[A.GAMMA_NOTE],
    )
    for name in cfg.suites:
        t = time.perf_counter()
        sub = runners[name]()
        sub.elapsed = time.perf_counter() - t
        agg.suites.append(sub)
    agg.elapsed = time.perf_counter() - start
    if cfg.output:
        agg.write(cfg.output)
    return agg


def exit_status(report: VerificationReport) -> int:
    """0 all certified, 1 any failure, 5 undecided remains."""
    return {ClaimOutcome.CERTIFIED: 0, ClaimOutcome.FAILED: 1, ClaimOutcome.UNDECIDED: 5}[report.outcome]
