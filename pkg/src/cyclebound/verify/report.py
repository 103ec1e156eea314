"""Verification reports: claims with tri-state outcomes and certified margins.

JSON layout (schema ``cyclebound.report/1``)::

    {"schema": ..., "suite": ..., "outcome": ..., "params": {...},
     "seed": int | null, "notes": [...], "counts": {...},
     "claims": [{"id", "statement", "anchor", "outcome", "prec",
                 "margin": {"lo", "hi"} | null, "exact", "instances",
                 "witness", "note"}],
     "suites": [...]}        # aggregate reports only

Margins are the certified enclosure of ``lhs - rhs`` (or the relevant slack)
for the tightest instance.  ``elapsed`` is included only on request so that
reports are byte-stable.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from ..bounds.certreal import CertReal, Outcome
from ..bounds.expr import Verdict

SCHEMA = "cyclebound.report/1"


class ClaimOutcome(enum.Enum):
    CERTIFIED = "CERTIFIED"
    FAILED = "FAILED"
    UNDECIDED = "UNDECIDED"

    @classmethod
    def of(cls, o: Outcome) -> "ClaimOutcome":
        return {Outcome.TRUE: cls.CERTIFIED, Outcome.FALSE: cls.FAILED, Outcome.UNDECIDED: cls.UNDECIDED}[o]


def worst(outcomes: Iterable[ClaimOutcome]) -> ClaimOutcome:
    outs = list(outcomes)
    if ClaimOutcome.FAILED in outs:
        return ClaimOutcome.FAILED
    if ClaimOutcome.UNDECIDED in outs:
        return ClaimOutcome.UNDECIDED
    return ClaimOutcome.CERTIFIED


@dataclass
class Claim:
    id: str
    statement: str
    anchor: str
    outcome: ClaimOutcome
    prec: int
    margin: Optional[CertReal] = None
    exact: bool = False
    instances: int = 1
    witness: Any = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "anchor": self.anchor,
            "outcome": self.outcome.value,
            "prec": self.prec,
            "margin": None if self.margin is None else self.margin.to_json(),
            "exact": self.exact,
            "instances": self.instances,
            "witness": self.witness,
            "note": self.note,
        }


class ClaimBuilder:
    """Folds many instance verdicts into one claim.

    Keeps the first failing (else first undecided) instance as the witness,
    otherwise the instance with the smallest certified margin.
    """

    def __init__(self, id: str, statement: str, anchor: str):
        self.id, self.statement, self.anchor = id, statement, anchor
        self.count = 0
        self.outcome = ClaimOutcome.CERTIFIED
        self.margin: Optional[CertReal] = None
        self.witness: Any = None
        self.prec = 0
        self.exact = False
        self.notes: list[str] = []

    def add(self, verdict: Verdict, witness: Any = None, margin: Optional[CertReal] = None) -> ClaimOutcome:
        out = ClaimOutcome.of(verdict.outcome)
        return self.add_outcome(out, verdict.prec, margin if margin is not None else verdict.margin, witness, verdict.exact)

    def add_outcome(self, out: ClaimOutcome, prec: int, margin: Optional[CertReal], witness: Any = None, exact: bool = False) -> ClaimOutcome:
        self.count += 1
        self.prec = max(self.prec, prec)
        self.exact = self.exact or exact
        if out is ClaimOutcome.FAILED:
            if self.outcome is not ClaimOutcome.FAILED:
                self.outcome, self.witness, self.margin = out, witness, margin
        elif out is ClaimOutcome.UNDECIDED:
            if self.outcome is ClaimOutcome.CERTIFIED:
                self.outcome, self.witness, self.margin = out, witness, margin
        elif self.outcome is ClaimOutcome.CERTIFIED and margin is not None:
            if self.margin is None or margin.lo < self.margin.lo:
                self.margin, self.witness = margin, witness
        return out

    def note(self, text: str) -> None:
        self.notes.append(text)

    def build(self) -> Claim:
        return Claim(
            self.id,
            self.statement,
            self.anchor,
            self.outcome,
            self.prec,
            self.margin,
            self.exact,
            self.count,
            self.witness,
            "; ".join(self.notes),
        )


@dataclass
class VerificationReport:
    suite: str
    claims: list[Claim] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    seed: Optional[int] = None
    notes: list[str] = field(default_factory=list)
    elapsed: Optional[float] = None
    suites: list["VerificationReport"] = field(default_factory=list)

    def add(self, claim: Claim) -> Claim:
        self.claims.append(claim)
        return claim

    def all_claims(self) -> list[Claim]:
        out = list(self.claims)
        for sub in self.suites:
            out.extend(sub.all_claims())
        return out

    @property
    def outcome(self) -> ClaimOutcome:
        return worst(c.outcome for c in self.all_claims())

    def counts(self) -> dict:
        out = {o.value: 0 for o in ClaimOutcome}
        for c in self.all_claims():
            out[c.outcome.value] += 1
        return out

    def claim(self, id: str) -> Claim:
        for c in self.all_claims():
            if c.id == id:
                return c
        raise KeyError(id)

    def to_json(self, include_elapsed: bool = False) -> dict:
        out = {
            "schema": SCHEMA,
            "suite": self.suite,
            "outcome": self.outcome.value,
            "params": self.params,
            "seed": self.seed,
            "notes": self.notes,
            "counts": self.counts(),
            "claims": [c.to_json() for c in self.claims],
        }
        if self.suites:
            out["suites"] = [s.to_json(include_elapsed) for s in self.suites]
        if include_elapsed and self.elapsed is not None:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out

    def dumps(self, include_elapsed: bool = False) -> str:
        return json.dumps(self.to_json(include_elapsed), indent=2, sort_keys=False) + "\n"

    def write(self, path, include_elapsed: bool = False) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps(include_elapsed))

    def summary(self) -> str:
        lines = []
        self._summary(lines, 0)
        return "\n".join(lines) + "\n"

    def _summary(self, lines: list[str], depth: int) -> None:
        pad = "  " * depth
        counts = self.counts()
        lines.append(
            f"{pad}[{self.outcome.value}] suite {self.suite}: "
            + ", ".join(f"{v} {k.lower()}" for k, v in counts.items() if v)
        )
        for note in self.notes:
            lines.append(f"{pad}  note: {note}")
        for c in self.claims:
            margin = "" if c.margin is None else f"  margin [{c.margin.to_json(8)['lo']}, {c.margin.to_json(8)['hi']}]"
            extra = " exact" if c.exact else ""
            lines.append(f"{pad}  {c.outcome.value:<9} {c.id}: {c.statement} (x{c.instances}{extra}){margin}")
            if c.outcome is not ClaimOutcome.CERTIFIED and c.witness is not None:
                lines.append(f"{pad}      witness: {c.witness}")
            if c.note:
                lines.append(f"{pad}      note: {c.note}")
        for sub in self.suites:
            sub._summary(lines, depth + 1)
