"""The ten acceptance criteria, each at its stated tolerance and time limit."""

import math
import time
from fractions import Fraction

import pytest

from cyclebound import constructions as C
from cyclebound.bounds import expr as X
from cyclebound.bounds.certreal import Outcome
from cyclebound.graphcore import (
    KNOWN_CENSUS,
    Graph,
    ZeroOneMatrix,
    check_paths_bound,
    count_cycles,
    count_st_paths,
    cycle_bound_report,
    graphs_on,
    path_bound_expr,
    permanent,
)
from cyclebound.verify import ClaimOutcome, suite_constants, suite_funnelweight, suite_inequalities, suite_lcases
from cyclebound.verify.analytic import P_SET, RESIDUAL_FAMILIES
from cyclebound.verify.common import rng
from cyclebound.verify.graphs import construction_instances, random_matrix, random_multigraph

LOG_KAPPA1 = math.log(2 + 2 * math.sqrt(2)) / 5


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def _certified(rep, ids):
    return {i: rep.claim(i).outcome is ClaimOutcome.CERTIFIED for i in ids}


def test_criterion_01_gamma_identity(acceptance):
    with Timer() as t:
        rep = suite_constants()
        g = X.Pow(X.b(5), Fraction(2, 5)).interval(128)
        contains = X.Pow(X.Const(442368), Fraction(1, 40)).interval(128).overlaps(g)
        inside = Fraction(138402, 100000) < g.lo and g.hi < Fraction(138404, 100000)
        ids = ("gamma-closed-form", "gamma-range", "gamma-printed-exponent")
        flags = _certified(rep, ids)
        flagged = any("1/10" in n for n in rep.notes)
    ok = contains and inside and all(flags.values()) and flagged and t.seconds < 1
    acceptance(1, ok, f"gamma in [{float(g.lo):.7f}, {float(g.hi):.7f}], 1/10 exponent flagged", t.seconds)
    assert ok, flags


def test_criterion_02_constant_table(acceptance):
    with Timer() as t:
        rep = suite_constants()
        ids = ("alpha2-lower", "alpha3-upper", "a1-range", "a2-range", "a3-lower", "gamma4-upper", "b6-upper", "kappa1-range")
        flags = _certified(rep, ids)
    ok = all(flags.values()) and t.seconds < 1
    acceptance(2, ok, f"{sum(flags.values())}/{len(ids)} table entries certified", t.seconds)
    assert ok, flags


def test_criterion_03_funnelweight(acceptance):
    with Timer() as t:
        rep = suite_funnelweight(L=40)
        ids = ("p2-zero", "p3", "p4", "p5", "p6", "p7", "p8", "p9", "induction-margin")
        flags = _certified(rep, ids)
        exact_zero = rep.claim("p2-zero").exact
    ok = all(flags.values()) and exact_zero and t.seconds < 1
    acceptance(3, ok, "p(2)=0 exact, p(3..9) thresholds and induction margin certified", t.seconds)
    assert ok, flags


def test_criterion_04_lcases(acceptance):
    with Timer() as t:
        rep = suite_lcases(prec=128)
    ids = ("survivor-set", "scan-margins", "tie-22", "residual-set", "residual-margins", "tie-323")
    flags = _certified(rep, ids)
    scan_min = rep.claim("scan-margins").margin.lo
    res_min = rep.claim("residual-margins").margin.lo
    ok = all(flags.values()) and scan_min >= Fraction(3, 100) and res_min >= Fraction(5, 1000) and t.seconds < 60
    acceptance(4, ok, f"|P|={len(P_SET)}, {len(RESIDUAL_FAMILIES)} residual triples; min margins {float(scan_min):.4f} / {float(res_min):.5f}", t.seconds)
    assert ok, flags


def test_criterion_05_path_bound_simple(acceptance):
    with Timer() as t:
        counts_ok = all(len(graphs_on(n)) == KNOWN_CENSUS[n] for n in range(1, 7))
        pairs = violations = 0
        for n in range(1, 7):
            for G in graphs_on(n):
                res = check_paths_bound(G)
                pairs += len(res.rows)
                violations += len(res.failures())
    ok = counts_ok and violations == 0 and t.seconds < 300
    acceptance(5, ok, f"census 1/2/4/11/34/156 {'ok' if counts_ok else 'WRONG'}; {pairs} ordered pairs, {violations} violations", t.seconds)
    assert ok


def test_criterion_06_path_bound_multi(acceptance):
    with Timer() as t:
        gen = rng(0)
        violations = pairs = 0
        for _ in range(1000):
            G = random_multigraph(gen, n_max=6, mult_max=4)
            res = check_paths_bound(G)
            pairs += len(res.rows)
            violations += len(res.failures())
        witness = True
        for l in range(2, 11):
            G = Graph(2, [(0, 1, l)])
            p = count_st_paths(G, 0, 1)
            q = path_bound_expr(G, 0)
            witness &= p == l
            witness &= X.certify(q, "==", X.Pow(X.Const(l), Fraction(3, 2))).outcome is Outcome.TRUE
            witness &= X.certify(X.Const(p) / q, "==", X.Pow(X.Const(l), Fraction(-1, 2))).outcome is Outcome.TRUE
    ok = violations == 0 and witness and t.seconds < 120
    acceptance(6, ok, f"1000 multigraphs, {pairs} pairs, {violations} violations; l parallel edges ratio l^(-1/2) exact", t.seconds)
    assert ok


def test_criterion_07_bregman(acceptance):
    with Timer() as t:
        gen = rng(0)
        bad = 0
        for _ in range(500):
            M = random_matrix(gen, n_max=10)
            if X.certify(X.Const(permanent(M)), "<=", X.bregman(M.row_sums())).outcome is not Outcome.TRUE:
                bad += 1
        equal = all(
            permanent(ZeroOneMatrix.ones(n)) == math.factorial(n)
            and X.certify(X.Const(math.factorial(n)), "==", X.bregman([n] * n)).outcome is Outcome.TRUE
            for n in range(1, 11)
        )
    ok = bad == 0 and equal and t.seconds < 120
    acceptance(7, ok, f"500 matrices, {bad} violations; all-ones equality n=1..10", t.seconds)
    assert ok


def test_criterion_08_construction_tightness(acceptance):
    with Timer() as t:
        ears = all(count_st_paths(*C.ear_path(m)) == 2**m for m in range(1, 13))
        tripled = all(count_cycles(C.tripled_cycle(L)) == 3**L + 3 * L for L in range(3, 7))
        ring = [count_cycles(C.k4_ring(N)) for N in (7, 8)]
        rate = math.log(ring[1] / ring[0]) / 5
        chain = [count_cycles(C.k4_chain(N)) for N in (7, 8)]
        open_rate = math.log(chain[1] / chain[0]) / 5
    ok = ears and tripled and abs(rate - LOG_KAPPA1) < 0.02 and t.seconds < 600
    acceptance(
        8, ok,
        f"ear-path 2^m (m<=12), tripled 3^L+3L (L<=6); growth at N=8 on the closed K4 ring {rate:.4f} vs log kappa1 "
        f"{LOG_KAPPA1:.5f}; open k4-chain gives {open_rate:.4f} (literal reading unattainable, see notes)",
        t.seconds,
    )
    assert ok


@pytest.mark.xfail(strict=True, reason="the open chain grows like 2 per block, i.e. log(2)/5 per edge, never log kappa1")
def test_criterion_08_literal_open_chain():
    chain = [count_cycles(C.k4_chain(N)) for N in (7, 8)]
    assert abs(math.log(chain[1] / chain[0]) / 5 - LOG_KAPPA1) < 0.02


def test_criterion_09_bound_sandwich(acceptance):
    with Timer() as t:
        instances = [G for _, G in construction_instances(30)]
        instances += [G for n in range(1, 7) for G in graphs_on(n)]
        checked = bad = 0
        for G in instances:
            if not G.simple or G.m == 0 or G.m > 30 or G.min_degree() < 2:
                continue
            rep = cycle_bound_report(G)
            checked += 1
            for name in ("avgdeg", "bregman"):
                row = rep.row(name)
                if row is None or row.outcome is not Outcome.TRUE:
                    bad += 1
    ok = bad == 0 and checked > 0 and t.seconds < 600
    acceptance(9, ok, f"{checked} simple instances with min degree >= 2, {bad} violations of m gamma_d^m or the permanent route", t.seconds)
    assert ok


def test_criterion_10_inequalities(acceptance):
    with Timer() as t:
        rep = suite_inequalities(seed=0, samples=10_000)
    ids = [c.id for c in rep.claims]
    flags = _certified(rep, ids)
    overlap = rep.claim("boundary-recursion").outcome is ClaimOutcome.CERTIFIED
    ok = all(flags.values()) and overlap and t.seconds < 300
    n = sum(c.instances for c in rep.claims)
    acceptance(10, ok, f"{n} instances across {len(ids)} claims, boundary overlap certified", t.seconds)
    assert ok, [i for i, v in flags.items() if not v]
