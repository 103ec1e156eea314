"""Generators for the extremal and motivating graph families."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .graphcore.graph import Graph


class Family(enum.Enum):
    EAR_PATH = "ear-path"
    K4_CHAIN = "k4-chain"
    K4_RING = "k4-ring"
    TRIPLED_CYCLE = "tripled-cycle"
    CIRCULANT = "circulant"


class SizeError(ValueError):
    """Family size or parameters out of range."""


def ear_path(m: int) -> tuple[Graph, int, int]:
    """Path ``v0..vm`` with one extra vertex adjacent to both ends of each path edge.

    Returns ``(G, s, t)`` with ``s = 0`` and ``t = m``; ear vertices are
    ``m+1..2m``.  Every path edge can be replaced by its ear, so there are
    ``2**m`` s-t paths.
    """
    if m < 1:
        raise SizeError("ear_path needs m >= 1")
    edges = []
    for i in range(m):
        ear = m + 1 + i
        edges += [(i, i + 1), (i, ear), (i + 1, ear)]
    return Graph(2 * m + 1, edges), 0, m


def k4_chain(N: int) -> Graph:
    """Open chain of ``N`` rungs ``u_i v_i`` with consecutive rungs forming a K4.

    Vertices ``u_i = i`` and ``v_i = N + i``.  ``N = 2`` is K4; ``m = 5N - 4``.
    """
    if N < 2:
        raise SizeError("k4_chain needs N >= 2")
    edges = [(i, N + i) for i in range(N)]
    for i in range(N - 1):
        edges += [(i, i + 1), (N + i, N + i + 1), (i + 1, N + i), (N + i + 1, i)]
    return Graph(2 * N, edges)


def k4_ring(N: int) -> Graph:
    """Closed version of :func:`k4_chain`: rung ``N-1`` is also joined to rung 0.

    5-regular on ``2N`` vertices with ``m = 5N``, which removes the end
    effects of the open chain when measuring growth per edge.
    """
    if N < 3:
        raise SizeError("k4_ring needs N >= 3")
    edges = [(i, N + i) for i in range(N)]
    for i in range(N):
        j = (i + 1) % N
        edges += [(i, j), (N + i, N + j), (j, N + i), (N + j, i)]
    return Graph(2 * N, edges)


def tripled_cycle(L: int) -> Graph:
    """Cycle of length ``L`` with every edge of multiplicity 3 (``m = 3L``).

    ``L = 2`` is rejected: both cycle edges would join the same pair and
    merge into a single class of multiplicity 6.
    """
    if L < 3:
        raise SizeError("tripled_cycle needs L >= 3")
    return Graph(L, [(i, (i + 1) % L, 3) for i in range(L)])


def circulant(n: int, offsets: Sequence[int]) -> Graph:
    """Vertex ``i`` adjacent to ``i +- o (mod n)`` for each offset; ``2|offsets|``-regular."""
    offs = list(offsets)
    if n < 3:
        raise SizeError("circulant needs n >= 3")
    if not offs:
        raise SizeError("circulant needs at least one offset")
    if len(set(offs)) != len(offs):
        raise SizeError("circulant offsets must be distinct")
    for o in offs:
        if not (1 <= o and 2 * o < n):
            raise SizeError(f"offset {o} must satisfy 1 <= o < n/2 for n = {n}")
    return Graph(n, [(i, (i + o) % n) for i in range(n) for o in offs])


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    size: int
    extra: tuple[int, ...] = field(default=())

    def build(self) -> Graph:
        return build(self)

    @property
    def label(self) -> str:
        if self.extra:
            return f"{self.family.value}({self.size};{','.join(map(str, self.extra))})"
        return f"{self.family.value}({self.size})"


def build(spec: FamilySpec) -> Graph:
    f = spec.family
    if f is Family.EAR_PATH:
        return ear_path(spec.size)[0]
    if f is Family.K4_CHAIN:
        return k4_chain(spec.size)
    if f is Family.K4_RING:
        return k4_ring(spec.size)
    if f is Family.TRIPLED_CYCLE:
        return tripled_cycle(spec.size)
    if f is Family.CIRCULANT:
        return circulant(spec.size, spec.extra or (1, 2))
    raise SizeError(f"unknown family {f!r}")


def parse_family(name: str) -> Family:
    try:
        return Family(name)
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise SizeError(f"unknown family {name!r}; choose from {names}") from None
