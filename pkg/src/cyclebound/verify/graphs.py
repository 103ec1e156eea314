"""Graph-level suite: path bounds, funnel trees, Bregman, construction instances."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Optional

import numpy as np

from .. import constructions as C
from ..bounds import expr as X
from ..bounds.certreal import CertReal, Outcome
from ..graphcore import (
    KNOWN_CENSUS,
    Graph,
    ZeroOneMatrix,
    check_paths_bound,
    count_cycles,
    count_st_paths,
    cycle_bound_report,
    edge_path_sum,
    graphs_on,
    path_bound_expr,
    permanent,
)
from .common import RNG_ALGORITHM, Precision, check, check_bool, rng
from .report import ClaimBuilder, ClaimOutcome, VerificationReport

Q = Fraction


def random_multigraph(gen: np.random.Generator, n_max: int = 6, mult_max: int = 4) -> Graph:
    """Each pair is absent with probability 1/2, else gets multiplicity uniform in 1..mult_max."""
    n = int(gen.integers(2, n_max + 1))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if gen.random() < 0.5:
                edges.append((u, v, int(gen.integers(1, mult_max + 1))))
    return Graph(n, edges)


def prufer_tree(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return edges


def funnel_tree_data(n: int, edges: list[tuple[int, int]], r: int) -> Optional[tuple[int, int, list[int]]]:
    """``(l, d, degrees of S)`` if the tree meets the funnel hypothesis, else ``None``."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    leaves = {v for v in range(n) if v != r and len(adj[v]) == 1}
    for v in range(n):
        if sum(1 for w in adj[v] if w in leaves) > 1:
            return None
    S = [len(adj[v]) for v in range(n) if v != r and v not in leaves]
    return len(leaves), len(adj[r]), S


def random_funnel_trees(gen: np.random.Generator, count: int, n_max: int = 14) -> Iterator[tuple]:
    """Seeded rejection sampling: uniform labelled trees, random root, keep those meeting the hypothesis."""
    found = 0
    while found < count:
        n = int(gen.integers(2, n_max + 1))
        seq = [int(x) for x in gen.integers(0, n, size=n - 2)]
        edges = prufer_tree(seq, n)
        r = int(gen.integers(0, n))
        data = funnel_tree_data(n, edges, r)
        if data is None:
            continue
        found += 1
        yield n, edges, r, data


def random_matrix(gen: np.random.Generator, n_max: int = 10) -> ZeroOneMatrix:
    """Density uniform in (0, 1); rows resampled until nonzero."""
    n = int(gen.integers(1, n_max + 1))
    p = float(gen.uniform(0.05, 1.0))
    rows = []
    for _ in range(n):
        while True:
            row = [int(x) for x in gen.random(n) < p]
            if any(row):
                break
        rows.append(row)
    return ZeroOneMatrix.from_lists(rows)


def construction_instances(m_max: int = 30) -> list[tuple[str, Graph]]:
    out = []
    specs = (
        [C.FamilySpec(C.Family.EAR_PATH, m) for m in range(1, 11)]
        + [C.FamilySpec(C.Family.K4_CHAIN, N) for N in range(2, 7)]
        + [C.FamilySpec(C.Family.K4_RING, N) for N in range(3, 7)]
        + [C.FamilySpec(C.Family.TRIPLED_CYCLE, L) for L in range(3, 11)]
        + [C.FamilySpec(C.Family.CIRCULANT, n, (1,)) for n in range(3, 31)]
        + [C.FamilySpec(C.Family.CIRCULANT, n, (1, 2)) for n in range(5, 16)]
        + [C.FamilySpec(C.Family.CIRCULANT, n, (1, 2, 3)) for n in range(7, 11)]
    )
    for spec in specs:
        G = spec.build()
        if G.m <= m_max:
            out.append((spec.label, G))
    return out


def suite_graph_theorems(
    n_max: int = 6,
    samples: int = 1000,
    seed: int = 0,
    prec: Optional[int] = None,
    max_prec: Optional[int] = None,
    matrix_samples: int = 500,
    tree_samples: int = 500,
    m_max: int = 30,
) -> VerificationReport:
    P = Precision.resolve(prec, max_prec)
    rep = VerificationReport(
        "graph_theorems",
        params={
            "n_max": n_max,
            "samples": samples,
            "matrix_samples": matrix_samples,
            "tree_samples": tree_samples,
            "m_max": m_max,
            "prec": P.prec,
            "max_prec": P.max_prec,
            "rng": RNG_ALGORITHM,
        },
        seed=seed,
        notes=["cycles are edge subsets forming a connected 2-regular subgraph; parallel pairs count as 2-cycles"],
    )
    gen = rng(seed)

    # (a) census and the simple-graph path bound
    census = {n: graphs_on(n) for n in range(1, n_max + 1)}
    cb = ClaimBuilder("census", f"isomorphism classes of graphs on 1..{n_max} vertices match the known counts", "exhaustive census")
    for n, gs in census.items():
        if n in KNOWN_CENSUS:
            check_bool(cb, len(gs) == KNOWN_CENSUS[n], (n, len(gs)))
    rep.add(cb.build())

    cb = ClaimBuilder("paths-simple", f"p(s,t) <= q_s for every graph on <= {n_max} vertices and every ordered pair s != t",
                      "path bound, simple graphs")
    for gs in census.values():
        for G in gs:
            for row in check_paths_bound(G, P.prec, P.max_prec).rows:
                cb.add_outcome(ClaimOutcome.of(row.outcome), P.prec, row.q - row.p, (G.edges, row.s, row.t), row.exact)
    cb.note("s = t is trivial: p = 1 and q_s >= 1")
    rep.add(cb.build())

    # (b) multigraphs
    cb = ClaimBuilder("paths-multi", f"p(s,t) <= q'_s on {samples} random multigraphs (n <= 6, multiplicity <= 4)",
                      "path bound, multigraphs")
    for _ in range(samples):
        G = random_multigraph(gen)
        for row in check_paths_bound(G, P.prec, P.max_prec).rows:
            cb.add_outcome(ClaimOutcome.of(row.outcome), P.prec, row.q - row.p, (G.n, G.edges, row.s, row.t), row.exact)
    rep.add(cb.build())

    cb = ClaimBuilder("paths-multi-parallel", "l parallel edges: p = l <= l^(3/2) = q' with p/q' = l^(-1/2), 2 <= l <= 12",
                      "path bound, multigraphs")
    for l in range(2, 13):
        G = Graph(2, [(0, 1, l)])
        p = count_st_paths(G, 0, 1)
        q = path_bound_expr(G, 0)
        check_bool(cb, p == l, ("p", l))
        check(cb, P, q, "==", X.Pow(X.Const(l), Q(3, 2)), ("q", l))
        check(cb, P, X.Const(p) / q, "==", X.Pow(X.Const(l), Q(-1, 2)), ("ratio", l))
    rep.add(cb.build())

    # (c) funnel trees
    cb = ClaimBuilder("funnel-trees", f"prod_S b(deg v) >= phi(l, d) on {tree_samples} random trees meeting the one-leaf hypothesis",
                      "funnel base lemma")
    for n, edges, r, (l, d, S) in random_funnel_trees(gen, tree_samples):
        lhs = X.Prod([X.Const(1)] + [X.b(k) for k in S])
        check(cb, P, lhs, ">=", X.phi(l, d), (n, edges, r))
    rep.add(cb.build())

    # (d) Bregman
    cb = ClaimBuilder("bregman-random", f"perm(A) <= prod (r_i!)^(1/r_i) on {matrix_samples} random 0/1 matrices, n <= 10",
                      "Bregman bound")
    for _ in range(matrix_samples):
        M = random_matrix(gen)
        check(cb, P, X.Const(permanent(M)), "<=", X.bregman(M.row_sums()), M.to_lists())
    rep.add(cb.build())
    cb = ClaimBuilder("bregman-ones", "all-ones n x n: perm = n! = prod (n!)^(1/n), 1 <= n <= 10", "Bregman bound")
    for n in range(1, 11):
        M = ZeroOneMatrix.ones(n)
        check_bool(cb, permanent(M) == factorial(n), ("perm", n))
        check(cb, P, X.Const(factorial(n)), "==", X.bregman(M.row_sums()), n)
    rep.add(cb.build())

    # (e) constructions and cycle bounds
    instances = construction_instances(m_max)
    cb = ClaimBuilder("ear-path-count", "ear_path(m) has exactly 2^m s-t paths, 1 <= m <= 12", "ear-path construction")
    for m in range(1, 13):
        G, s, t = C.ear_path(m)
        check_bool(cb, count_st_paths(G, s, t) == 2**m, m)
    rep.add(cb.build())
    cb = ClaimBuilder("tripled-cycle-count", "tripled_cycle(L) has exactly 3^L + 3L cycles, 3 <= L <= 10", "multigraph tightness")
    for L in range(3, 11):
        check_bool(cb, count_cycles(C.tripled_cycle(L)) == 3**L + 3 * L, L)
    rep.add(cb.build())

    sandwich = ClaimBuilder(
        "sandwich",
        f"cycles <= m gamma_d^m and cycles <= prod (deg+1)!^(1/(deg+1)) for every instance with m <= {m_max} and min degree >= 2",
        "average-degree and permanent bounds",
    )
    other = ClaimBuilder("cycle-bounds", f"every applicable cycle bound holds on every instance with m <= {m_max}", "cycle bounds")
    accounting = ClaimBuilder("long-cycle-accounting", "sum over edges of p(G_e) <= m alpha(1) beta", "long-cycle accounting")
    census_graphs = [(f"census{G.n}:{i}", G) for gs in census.values() for i, G in enumerate(gs) if G.m]
    for label, G in instances + census_graphs:
        res = cycle_bound_report(G, P.prec, P.max_prec)
        for row in res.rows:
            target = sandwich if row.name in ("avgdeg", "bregman") and G.min_degree() >= 2 else other
            margin = row.value - res.count if row.name not in ("beta", "perm_bregman") else None
            target.add_outcome(ClaimOutcome.of(row.outcome), P.prec, margin, (label, row.name))
        if G.simple:
            beta = X.Prod([X.Const(1)] + [X.b(d) for d in G.degrees() if d > 1])
            check(accounting, P, X.Const(edge_path_sum(G)), "<=", X.Const(G.m) * X.alpha(1) * beta, label)
    rep.add(sandwich.build())
    rep.add(other.build())
    rep.add(accounting.build())

    cb = ClaimBuilder(
        "short-cycle-chain",
        "sum_{j=3}^{l} C(m,j) <= l C(m,l) <= m (e m/l)^l < m 1.37^m with l = floor(m/11), 11 <= m <= 400",
        "short cycles are negligible",
    )
    for m in range(11, 401):
        ell = m // 11
        total = sum(comb(m, j) for j in range(3, ell + 1))
        check_bool(cb, total <= ell * comb(m, ell), ("sum", m))
        upper = X.Const(m) * X.Pow(X.e_expr() * X.Const(Q(m, ell)), ell)
        check(cb, P, X.Const(ell * comb(m, ell)), "<=", upper, ("entropy", m))
        check(cb, P, upper, "<", X.Const(m) * X.Pow(X.Const(Q(137, 100)), m), ("base", m))
    rep.add(cb.build())
    return rep
