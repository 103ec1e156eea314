"""Certification suites and their JSON reports."""

from .analytic import (
    P_SET,
    RESIDUAL_FAMILIES,
    suite_constants,
    suite_funnelweight,
    suite_inequalities,
    suite_lcases,
    suite_monotonicity,
    suite_wellbehaved,
)
from .graphs import suite_graph_theorems
from .report import SCHEMA, Claim, ClaimBuilder, ClaimOutcome, VerificationReport
from .runner import SUITE_NAMES, VerifyConfig, exit_status, run_full_certification

__all__ = [
    "P_SET",
    "RESIDUAL_FAMILIES",
    "SCHEMA",
    "SUITE_NAMES",
    "Claim",
    "ClaimBuilder",
    "ClaimOutcome",
    "VerificationReport",
    "VerifyConfig",
    "exit_status",
    "run_full_certification",
    "suite_constants",
    "suite_funnelweight",
    "suite_graph_theorems",
    "suite_inequalities",
    "suite_lcases",
    "suite_monotonicity",
    "suite_wellbehaved",
]
