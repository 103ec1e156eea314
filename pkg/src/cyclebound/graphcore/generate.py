"""Exhaustive isomorphism-free generation of small simple graphs.

Graphs on ``n`` vertices are produced by adding a vertex, joined to every
possible neighbour subset, to each representative on ``n - 1`` vertices.
Candidates are deduplicated by a canonical form: vertices are split into
cells by an iterated degree refinement, and the canonical adjacency word is
the minimum over relabellings that respect the ordered cells.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

from .graph import Graph

# Simple graphs on n unlabelled vertices, used as the generator self-check.
KNOWN_CENSUS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def _refine(adj: list[int], n: int) -> list[list[int]]:
    colour = [bin(adj[v]).count("1") for v in range(n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in range(n) if adj[v] >> w & 1))) for v in range(n)]
        keys = sorted(set(sig))
        new = [keys.index(sig[v]) for v in range(n)]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: list[list[int]] = [[] for _ in range(max(colour) + 1 if n else 0)]
    for v in range(n):
        cells[colour[v]].append(v)
    return cells


def canonical_word(adj: list[int], n: int) -> tuple[int, ...]:
    """Isomorphism invariant that separates non-isomorphic graphs.

    ``adj[v]`` is the neighbour bitmask of ``v``.  The word is the upper
    triangle of the relabelled adjacency matrix, minimised over all
    orderings that keep the refined cells in order.
    """
    cells = _refine(adj, n)
    best = None
    for parts in product(*(permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        word = tuple(
            (adj[order[i]] >> order[j]) & 1 for i in range(n) for j in range(i + 1, n)
        )
        if best is None or word < best:
            best = word
    return (n,) + (best or ())


def _graph_from_adj(adj: list[int], n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1])


def _adj_of(G: Graph) -> list[int]:
    adj = [0] * G.n
    for u, v, _ in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def graphs_on(n: int) -> list[Graph]:
    """One representative per isomorphism class of simple graphs on ``n`` vertices."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    layer = [[]]  # adjacency lists for n = 0
    for k in range(1, n + 1):
        seen: dict[tuple, list[int]] = {}
        for adj in layer:
            for mask in range(1 << (k - 1)):
                new = [a | ((mask >> v & 1) << (k - 1)) for v, a in enumerate(adj)] + [mask]
                word = canonical_word(new, k)
                if word not in seen:
                    seen[word] = new
        layer = [seen[w] for w in sorted(seen)]
    return [_graph_from_adj(adj, n) for adj in layer]


def all_graphs_up_to(n_max: int) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from graphs_on(n)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or not (G.simple and H.simple):
        return False
    return canonical_word(_adj_of(G), G.n) == canonical_word(_adj_of(H), H.n)
