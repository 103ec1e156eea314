"""Exact path, cycle and permanent counts.

Counts are Python integers.  Enumeration is backtracking in ascending
neighbour order, dispatched to the compiled kernels when available.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .. import kernels
from .graph import Graph

#: Largest matrix dimension accepted by :func:`permanent`.
PERMANENT_MAX_N = 24


def _check_vertex(G: Graph, v) -> None:
    if not G.has_vertex(v):
        raise KeyError(f"unknown vertex {v!r} (graph has {G.n} vertices)")


def count_st_paths(G: Graph, s: int, t: int) -> int:
    """Self-avoiding s-t paths; parallel edges give distinct paths, ``p(s, s) = 1``."""
    _check_vertex(G, s)
    _check_vertex(G, t)
    if s == t:
        return 1
    indptr, nbrs, mults = G.csr
    return kernels.st_paths(indptr, nbrs, mults, s, t, G.m)


def count_cycles(G: Graph) -> int:
    """Edge sets forming a connected 2-regular sub-multigraph.

    A pair of parallel edges is a 2-cycle; a longer cycle of the underlying
    simple graph is counted once per choice of parallel copy on each edge.
    """
    two_cycles = sum(comb(mult, 2) for _, _, mult in G.edges)
    indptr, nbrs, mults = G.csr
    return two_cycles + kernels.cycles(indptr, nbrs, mults, G.m)


@dataclass(frozen=True)
class ZeroOneMatrix:
    """Square 0/1 matrix stored as one column bitmask per row."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for r in self.rows:
            if not 0 <= r < limit:
                raise ValueError("row bitmask has bits outside the matrix")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "ZeroOneMatrix":
        n = len(entries)
        rows = []
        for i, row in enumerate(entries):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, matrix is not square")
            mask = 0
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) = {x!r} is not 0/1")
                mask |= x << j
            rows.append(mask)
        return cls(n, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "ZeroOneMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def ones(cls, n: int) -> "ZeroOneMatrix":
        return cls(n, tuple([(1 << n) - 1] * n))

    @classmethod
    def adjacency(cls, G: Graph, plus_identity: bool = False) -> "ZeroOneMatrix":
        if not G.simple:
            raise ValueError("adjacency matrix requires a simple graph")
        rows = [0] * G.n
        for u, v, _ in G.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if plus_identity:
            rows = [r | (1 << i) for i, r in enumerate(rows)]
        return cls(G.n, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def row_sums(self) -> list[int]:
        return [bin(r).count("1") for r in self.rows]


def permanent(M: ZeroOneMatrix) -> int:
    """Exact permanent by Ryser's formula (``n <= PERMANENT_MAX_N``)."""
    if M.n > PERMANENT_MAX_N:
        raise ValueError(f"permanent limited to n <= {PERMANENT_MAX_N}, got {M.n}")
    return kernels.permanent(M.rows, M.n)
