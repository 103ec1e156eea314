"""Loopless multigraph model and the edge-list text format.

Format::

    # comment
    n m [multi]
    u v            (one line per edge record; ``u v mult`` with ``multi``)

Indices are 0-based.  ``m`` is the number of edge records.  Duplicate
records are merged into a single edge with summed multiplicity, so
serialization is canonical: edges sorted with ``u < v``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Optional


class GraphFormatError(ValueError):
    """Malformed edge-list input; ``line`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class Graph:
    """Immutable loopless multigraph on vertices ``0..n-1``.

    ``edges`` holds ``(u, v, mult)`` with ``u < v``, sorted, one record per
    unordered pair.
    """

    def __init__(self, n: int, edges: Iterable[tuple] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        merged: dict[tuple[int, int], int] = {}
        for e in edges:
            u, v, mult = (e[0], e[1], e[2] if len(e) > 2 else 1)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if mult <= 0:
                raise ValueError(f"edge ({u}, {v}) has nonpositive multiplicity {mult}")
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0) + mult
        self.n = n
        self.edges = tuple((u, v, mult) for (u, v), mult in sorted(merged.items()))

    @property
    def simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edges)

    @cached_property
    def m(self) -> int:
        return sum(mult for _, _, mult in self.edges)

    @cached_property
    def _degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v, mult in self.edges:
            deg[u] += mult
            deg[v] += mult
        return tuple(deg)

    def degrees(self) -> list[int]:
        return list(self._degrees)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex ``(neighbour, mult)`` lists in ascending neighbour order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, mult in self.edges:
            adj[u].append((v, mult))
            adj[v].append((u, mult))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def csr(self) -> tuple[list[int], list[int], list[int]]:
        indptr, nbrs, mults = [0], [], []
        for row in self.adjacency:
            for w, mult in row:
                nbrs.append(w)
                mults.append(mult)
            indptr.append(len(nbrs))
        return indptr, nbrs, mults

    def multiplicity(self, u: int, v: int) -> int:
        for w, mult in self.adjacency[u]:
            if w == v:
                return mult
        return 0

    def has_vertex(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n

    def without_edge(self, u: int, v: int, count: int = 1) -> "Graph":
        """Copy with ``count`` parallel copies of ``uv`` removed."""
        key = (min(u, v), max(u, v))
        out = []
        found = False
        for a, b, mult in self.edges:
            if (a, b) == key:
                found = True
                if mult < count:
                    raise ValueError(f"edge {key} has multiplicity {mult} < {count}")
                mult -= count
            if mult:
                out.append((a, b, mult))
        if not found:
            raise ValueError(f"no edge {key}")
        return Graph(self.n, out)

    def relabel(self, perm) -> "Graph":
        """Image under the vertex map ``v -> perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v], mult) for u, v, mult in self.edges))

    def min_degree(self) -> int:
        return min(self._degrees) if self.n else 0

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        kind = "simple" if self.simple else "multi"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


def parse_graph(text: str) -> Graph:
    header: Optional[tuple[int, int, bool]] = None
    header_line = 0
    records: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            header = _parse_header(fields, lineno)
            header_line = lineno
            continue
        n, _, multi = header
        expected = 3 if multi else 2
        if len(fields) != expected:
            raise GraphFormatError(f"expected {expected} integers, got {len(fields)}", lineno)
        try:
            nums = [int(x) for x in fields]
        except ValueError:
            raise GraphFormatError(f"non-integer field in {line!r}", lineno) from None
        u, v = nums[0], nums[1]
        mult = nums[2] if multi else 1
        if u == v:
            raise GraphFormatError(f"loop at vertex {u} rejected", lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex index {x} out of range 0..{n - 1}", lineno)
        if mult <= 0:
            raise GraphFormatError(f"multiplicity must be positive, got {mult}", lineno)
        records.append((u, v, mult))
    if header is None:
        raise GraphFormatError("missing header line 'n m [multi]'")
    n, m, _ = header
    if len(records) != m:
        raise GraphFormatError(f"header declares {m} edge lines but {len(records)} found", header_line)
    return Graph(n, records)


def _parse_header(fields: list[str], lineno: int) -> tuple[int, int, bool]:
    multi = False
    if len(fields) == 3:
        if fields[2] != "multi":
            raise GraphFormatError(f"unknown header flag {fields[2]!r}", lineno)
        multi = True
    elif len(fields) != 2:
        raise GraphFormatError("header must be 'n m' or 'n m multi'", lineno)
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphFormatError("header counts must be integers", lineno) from None
    if n < 0 or m < 0:
        raise GraphFormatError("header counts must be nonnegative", lineno)
    return n, m, multi


def serialize_graph(G: Graph) -> str:
    lines = []
    if G.simple:
        lines.append(f"{G.n} {len(G.edges)}")
        lines.extend(f"{u} {v}" for u, v, _ in G.edges)
    else:
        lines.append(f"{G.n} {len(G.edges)} multi")
        lines.extend(f"{u} {v} {mult}" for u, v, mult in G.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(G: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(G))
