import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from cyclebound import kernels
from cyclebound.bounds import Outcome
from cyclebound.graphcore import (
    KNOWN_CENSUS,
    PERMANENT_MAX_N,
    Graph,
    GraphFormatError,
    ZeroOneMatrix,
    all_graphs_up_to,
    canonical_word,
    check_paths_bound,
    count_cycles,
    count_st_paths,
    cycle_bound_report,
    edge_path_sum,
    graphs_on,
    is_isomorphic,
    parse_graph,
    permanent,
    read_graph,
    serialize_graph,
    short_cycle_budget,
    write_graph,
)

K4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
TRIANGLE = Graph(3, [(0, 1), (1, 2), (0, 2)])


@st.composite
def multigraphs(draw, n_max=6, mult_max=3, m_max=11):
    n = draw(st.integers(2, n_max))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=8, unique=True))
    edges = [(u, v, draw(st.integers(1, mult_max))) for u, v in chosen]
    while sum(e[2] for e in edges) > m_max:
        edges.pop()
    return Graph(n, edges)


# -- model and format ----------------------------------------------------------

def test_graph_merges_duplicates_and_sorts():
    G = Graph(3, [(2, 0), (0, 2), (1, 0)])
    assert G.edges == ((0, 1, 1), (0, 2, 2))
    assert not G.simple and G.m == 3
    assert G.degrees() == [3, 1, 2]


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1, 0)])


def test_round_trip_simple_and_multi():
    for G in (K4, Graph(3, [(0, 1, 3), (1, 2, 1)]), Graph(5, [])):
        assert parse_graph(serialize_graph(G)) == G
    assert serialize_graph(Graph(3, [(0, 1, 2)])).splitlines()[0] == "3 1 multi"


def test_file_round_trip(tmp_path):
    path = tmp_path / "g.txt"
    write_graph(K4, path)
    assert read_graph(path) == K4


def test_comments_and_blank_lines():
    G = parse_graph("# K3\n\n3 3\n0 1\n# mid\n1 2\n0 2\n")
    assert G == TRIANGLE


@pytest.mark.parametrize(
    "text,line",
    [
        ("3 2\n0 1\n", 1),  # count mismatch, reported at the header
        ("3 1\n0 1 2\n", 2),  # extra field without multi
        ("3 1 multi\n0 1\n", 2),
        ("3 1\n0 x\n", 2),
        ("3 1\n1 1\n", 2),  # loop
        ("3 1\n0 3\n", 2),  # out of range
        ("3 1 multi\n0 1 0\n", 2),
        ("3 1 weird\n0 1\n", 1),
        ("a b\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_missing_header():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing\n")


def test_without_edge():
    G = Graph(2, [(0, 1, 3)])
    assert G.without_edge(0, 1).edges == ((0, 1, 2),)
    assert K4.without_edge(1, 0).m == 5
    with pytest.raises(ValueError):
        TRIANGLE.without_edge(0, 1, 2)


# -- counting against brute force ----------------------------------------------

def test_documented_counts():
    assert count_cycles(K4) == 7
    assert count_st_paths(K4, 0, 1) == 5
    assert count_st_paths(TRIANGLE, 1, 1) == 1
    multi = Graph(3, [(0, 1, 2), (1, 2, 3), (0, 2, 1)])
    assert count_cycles(multi) == 4 + 6  # parallel pairs plus triangles
    assert count_st_paths(multi, 0, 2) == 7


def test_unknown_vertex():
    with pytest.raises(KeyError):
        count_st_paths(K4, 0, 7)


@given(multigraphs())
@settings(max_examples=80, deadline=None)
def test_cycles_match_edge_subset_oracle(G):
    assert count_cycles(G) == O.brute_cycles(G)


@given(multigraphs(), st.data())
@settings(max_examples=80, deadline=None)
def test_paths_match_edge_subset_oracle(G, data):
    s = data.draw(st.integers(0, G.n - 1))
    t = data.draw(st.integers(0, G.n - 1))
    assert count_st_paths(G, s, t) == O.brute_paths(G, s, t)


@given(multigraphs())
@settings(max_examples=40, deadline=None)
def test_edge_path_sum_is_total_cycle_length(G):
    E = O.edge_copies(G)
    total = 0
    for r in range(2, len(E) + 1):
        for sub in itertools.combinations(range(len(E)), r):
            H = Graph(G.n, [E[i] for i in sub])
            degs = [d for d in H.degrees() if d]
            if all(d == 2 for d in degs) and count_cycles(H) == 1:
                total += r
    assert edge_path_sum(G) == total


def test_permanent_against_naive():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 7)
        rows = [[int(rng.random() < 0.5) for _ in range(n)] for _ in range(n)]
        assert permanent(ZeroOneMatrix.from_lists(rows)) == O.naive_permanent(rows)


def test_permanent_special_matrices():
    assert permanent(ZeroOneMatrix.ones(20)) == math.factorial(20)
    assert permanent(ZeroOneMatrix.identity(9)) == 1
    assert permanent(ZeroOneMatrix.from_lists([])) == 1
    with pytest.raises(ValueError):
        permanent(ZeroOneMatrix.ones(PERMANENT_MAX_N + 1))


def test_matrix_helpers():
    M = ZeroOneMatrix.adjacency(TRIANGLE, plus_identity=True)
    assert M.to_lists() == [[1, 1, 1]] * 3
    assert M.row_sums() == [3, 3, 3]
    assert permanent(M) == 6
    with pytest.raises(ValueError):
        ZeroOneMatrix.from_lists([[1, 2], [0, 1]])


# -- backend equivalence -------------------------------------------------------

@pytest.mark.skipif("cython" not in kernels.available_backends(), reason="compiled kernels not built")
def test_backends_agree():
    backends = kernels.available_backends()
    py, cy = backends["python"], backends["cython"]
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 7)
        edges = [(u, v, rng.randint(1, 3)) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.6]
        G = Graph(n, edges)
        indptr, nbrs, mults = G.csr
        assert py.cycles(indptr, nbrs, mults) == cy.cycles(indptr, nbrs, mults)
        for s, t in itertools.product(range(n), repeat=2):
            if s != t:
                assert py.st_paths(indptr, nbrs, mults, s, t) == cy.st_paths(indptr, nbrs, mults, s, t)
        rows = [sum(1 << j for j in range(n) if rng.random() < 0.5) for _ in range(n)]
        assert py.permanent(rows, n) == cy.permanent(rows, n)


def test_large_counts_route_to_python():
    G = Graph(2, [(0, 1, 200)])
    assert count_st_paths(G, 0, 1) == 200
    assert count_cycles(G) == math.comb(200, 2)


# -- generation -----------------------------------------------------------------

@pytest.mark.parametrize("n", range(0, 7))
def test_census_counts(n):
    assert len(graphs_on(n)) == KNOWN_CENSUS[n]


def test_generated_graphs_pairwise_non_isomorphic():
    gs = graphs_on(5)
    words = {canonical_word([sum(1 << v for v in range(G.n) if G.multiplicity(u, v)) for u in range(G.n)], G.n) for G in gs}
    assert len(words) == len(gs)


def test_isomorphism():
    P3a = Graph(3, [(0, 1), (1, 2)])
    P3b = Graph(3, [(0, 2), (2, 1)])
    assert is_isomorphic(P3a, P3b)
    assert not is_isomorphic(P3a, TRIANGLE)
    perm = [2, 0, 3, 1]
    assert is_isomorphic(K4.without_edge(0, 1), K4.without_edge(0, 1).relabel(perm))


def test_all_graphs_up_to():
    assert sum(1 for _ in all_graphs_up_to(4)) == 1 + 2 + 4 + 11


# -- bound comparison -----------------------------------------------------------

def test_paths_bound_on_triangle_and_k4():
    res = check_paths_bound(TRIANGLE)
    assert res.all_certified and res.bound == "q"
    assert all(r.exact for r in res.rows)  # q = 2 = p exactly
    assert check_paths_bound(K4).all_certified


def test_paths_bound_multigraph():
    G = Graph(3, [(0, 1, 3), (1, 2, 3), (0, 2, 3)])
    res = check_paths_bound(G)
    assert res.bound == "q'" and res.all_certified


def test_cycle_report_k4():
    rep = cycle_bound_report(K4)
    assert rep.count == 7 and rep.outcome is Outcome.TRUE
    assert {r.name for r in rep.rows} >= {"beta", "gamma_m", "thm_22beta", "avgdeg", "bregman", "perm", "perm_bregman"}
    assert rep.perm_a_plus_i == 24
    assert rep.bregman.contains(24)


def test_cycle_report_multigraph_and_low_degree():
    rep = cycle_bound_report(Graph(3, [(0, 1, 3), (1, 2, 3), (0, 2, 3)]))
    assert [r.name for r in rep.rows] == ["multi"] and rep.outcome is Outcome.TRUE
    assert rep.row("multi").value.contains(243)
    rep = cycle_bound_report(Graph(3, [(0, 1), (1, 2)]))
    assert rep.row("avgdeg") is None and rep.flags


def test_short_cycle_budget():
    assert short_cycle_budget(10) == 0
    assert short_cycle_budget(33) == math.comb(33, 3)


def test_pure_python_switch():
    import subprocess
    import sys

    env = dict(__import__("os").environ, CYCLEBOUND_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from cyclebound import kernels; print(kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"
