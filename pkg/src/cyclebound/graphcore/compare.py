"""Exact counts side by side with the certified degree-sequence bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from ..bounds import expr as X
from ..bounds import functions as F
from ..bounds.certreal import CertReal, Outcome, render_up
from ..bounds.expr import default_prec
from .counting import PERMANENT_MAX_N, ZeroOneMatrix, count_cycles, count_st_paths, permanent
from .graph import Graph


def combine(outcomes) -> Outcome:
    """FALSE dominates UNDECIDED, which dominates TRUE."""
    outcomes = list(outcomes)
    if any(o is Outcome.FALSE for o in outcomes):
        return Outcome.FALSE
    if any(o is Outcome.UNDECIDED for o in outcomes):
        return Outcome.UNDECIDED
    return Outcome.TRUE


def path_bound_expr(G: Graph, s: int) -> X.Expr:
    """``q_s`` for simple graphs, ``q'_s`` otherwise, as an expression."""
    degs = G.degrees()
    others = [d for v, d in enumerate(degs) if v != s]
    if G.simple:
        return X.q_simple(degs[s], others)
    return X.q_multi(degs[s], others)


@dataclass(frozen=True)
class PathBoundRow:
    s: int
    t: int
    p: int
    q: CertReal
    outcome: Outcome
    exact: bool = False

    @property
    def q_lo(self) -> Fraction:
        return self.q.lo

    @property
    def certified(self) -> bool:
        return self.outcome is Outcome.TRUE


@dataclass
class PathsBoundCheck:
    bound: str
    rows: list[PathBoundRow]
    max_ratio: float
    worst: Optional[tuple[int, int]]

    @property
    def outcome(self) -> Outcome:
        return combine(r.outcome for r in self.rows)

    @property
    def all_certified(self) -> bool:
        return self.outcome is Outcome.TRUE

    def failures(self) -> list[PathBoundRow]:
        return [r for r in self.rows if r.outcome is not Outcome.TRUE]


def check_paths_bound(G: Graph, prec: Optional[int] = None, max_prec: Optional[int] = None) -> PathsBoundCheck:
    """Certify ``p(s,t) <= q_s`` (simple) or ``<= q'_s`` (multi) for all ``s != t``."""
    prec = prec or default_prec()
    rows = []
    best, worst = 0.0, None
    for s in range(G.n):
        q_expr = path_bound_expr(G, s)
        q = q_expr.interval(prec)
        for t in range(G.n):
            if t == s:
                continue
            p = count_st_paths(G, s, t)
            v = X.certify(X.Const(p), "<=", q_expr, prec, max_prec)
            rows.append(PathBoundRow(s, t, p, q, v.outcome, v.exact))
            ratio = float(Fraction(p) / q.mid()) if p else 0.0
            if ratio > best:
                best, worst = ratio, (s, t)
    return PathsBoundCheck("q" if G.simple else "q'", rows, best, worst)


def edge_path_sum(G: Graph) -> int:
    """Sum over edge copies ``xy`` of the x-y paths avoiding that copy.

    Equals the total length of all cycles, since each cycle through a given
    edge copy is that copy plus one such path.
    """
    total = 0
    for u, v, mult in G.edges:
        total += mult * count_st_paths(G.without_edge(u, v), u, v)
    return total


def short_cycle_budget(m: int) -> int:
    """``sum_{j=3}^{floor(m/11)} C(m, j)``, the count of edge sets of short length."""
    ell = m // 11
    return sum(comb(m, j) for j in range(3, ell + 1))


@dataclass(frozen=True)
class BoundRow:
    name: str
    statement: str
    value: CertReal
    outcome: Outcome
    upper: str = ""


@dataclass
class CycleBoundReport:
    n: int
    m: int
    simple: bool
    count: int
    rows: list[BoundRow] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    perm_a_plus_i: Optional[int] = None

    def row(self, name: str) -> Optional[BoundRow]:
        for r in self.rows:
            if r.name == name:
                return r
        return None

    @property
    def gamma_m(self) -> Optional[CertReal]:
        r = self.row("gamma_m")
        return r.value if r else None

    @property
    def avgdeg_bound(self) -> Optional[CertReal]:
        r = self.row("avgdeg")
        return r.value if r else None

    @property
    def bregman(self) -> Optional[CertReal]:
        r = self.row("bregman")
        return r.value if r else None

    @property
    def outcome(self) -> Outcome:
        return combine(r.outcome for r in self.rows)


def cycle_bound_expressions(G: Graph) -> dict[str, tuple[str, X.Expr, X.Expr]]:
    """Named ``(statement, lhs, rhs)`` triples, each claiming ``lhs <= rhs``."""
    degs = G.degrees()
    m = G.m
    count = X.Const(count_cycles(G))
    out: dict[str, tuple[str, X.Expr, X.Expr]] = {}
    if not G.simple:
        b_prod = Fraction(1)
        for d in degs:
            b_prod *= F.eval_b_prime(d)
        out["multi"] = ("cycles <= m * prod b'(deg)", count, X.Const(m * b_prod))
        return out
    beta = X.Prod([X.Const(1)] + [X.b(d) for d in degs if d > 1])
    gamma_m = X.Pow(X.b(5), Fraction(2 * m, 5))
    out["beta"] = ("prod b(deg) <= gamma^m", beta, gamma_m)
    out["gamma_m"] = ("cycles <= 22 gamma^m + short-cycle budget", count, X.Const(22) * gamma_m + short_cycle_budget(m))
    out["thm_22beta"] = ("cycles <= 22 beta + short-cycle budget", count, X.Const(22) * beta + short_cycle_budget(m))
    if G.n and m and G.min_degree() >= 2:
        d = Fraction(2 * m, G.n)
        out["avgdeg"] = ("cycles <= m gamma_d^m", count, X.Const(m) * X.Pow(X.gamma_d(d), Fraction(m)))
    out["bregman"] = ("cycles <= prod (deg+1)!^(1/(deg+1))", count, X.bregman([d + 1 for d in degs]))
    return out


def cycle_bound_report(G: Graph, prec: Optional[int] = None, max_prec: Optional[int] = None) -> CycleBoundReport:
    """Exact cycle count against every applicable certified bound."""
    prec = prec or default_prec()
    rep = CycleBoundReport(G.n, G.m, G.simple, count_cycles(G))
    if not G.simple:
        rep.flags.append("multigraph: simple-graph bounds omitted")
    elif G.min_degree() < 2:
        rep.flags.append("minimum degree < 2: average-degree bound omitted")
    for name, (statement, lhs, rhs) in cycle_bound_expressions(G).items():
        v = X.certify(lhs, "<=", rhs, prec, max_prec)
        value = rhs.interval(v.prec)
        rep.rows.append(BoundRow(name, statement, value, v.outcome, render_up(value.hi, 12)))
    if G.simple and G.n <= PERMANENT_MAX_N:
        perm = permanent(ZeroOneMatrix.adjacency(G, plus_identity=True))
        rep.perm_a_plus_i = perm
        ok = rep.count <= perm
        rep.rows.append(
            BoundRow("perm", "cycles <= perm(A + I)", CertReal.exact(perm, prec), Outcome.TRUE if ok else Outcome.FALSE, str(perm))
        )
        rhs = X.bregman([d + 1 for d in G.degrees()])
        v = X.certify(X.Const(perm), "<=", rhs, prec, max_prec)
        value = rhs.interval(v.prec)
        rep.rows.append(BoundRow("perm_bregman", "perm(A + I) <= prod (deg+1)!^(1/(deg+1))", value, v.outcome, render_up(value.hi, 12)))
    return rep
