"""Pure-Python enumeration kernels (fallback for the compiled extension).

Graphs arrive in CSR form: ``indptr[v]:indptr[v+1]`` indexes the ascending
neighbour list of ``v`` in ``nbrs`` with parallel-edge multiplicities in
``mults``.  Counts are exact Python integers.
"""

from __future__ import annotations

import sys
from typing import Sequence


def st_paths(indptr: Sequence[int], nbrs: Sequence[int], mults: Sequence[int], s: int, t: int) -> int:
    """Number of self-avoiding s-t paths, parallel edges counted separately."""
    if s == t:
        return 1
    n = len(indptr) - 1
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))
    visited = [False] * n
    visited[s] = True
    total = 0

    def walk(v: int, weight: int) -> None:
        nonlocal total
        for i in range(indptr[v], indptr[v + 1]):
            w = nbrs[i]
            if visited[w]:
                continue
            if w == t:
                total += weight * mults[i]
                continue
            visited[w] = True
            walk(w, weight * mults[i])
            visited[w] = False

    walk(s, 1)
    return total


def cycles(indptr: Sequence[int], nbrs: Sequence[int], mults: Sequence[int]) -> int:
    """Weighted count of cycles of length >= 3 in the underlying simple graph.

    Each cycle is rooted at its least vertex ``s`` and traversed so that the
    second vertex is smaller than the last, which counts it exactly once.
    """
    n = len(indptr) - 1
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))
    visited = [False] * n
    total = 0

    def walk(s: int, first: int, v: int, depth: int, weight: int) -> None:
        nonlocal total
        for i in range(indptr[v], indptr[v + 1]):
            w = nbrs[i]
            if w == s:
                if depth >= 2 and first < v:
                    total += weight * mults[i]
            elif w > s and not visited[w]:
                visited[w] = True
                walk(s, first, w, depth + 1, weight * mults[i])
                visited[w] = False

    for s in range(n):
        visited[s] = True
        for i in range(indptr[s], indptr[s + 1]):
            f = nbrs[i]
            if f > s:
                visited[f] = True
                walk(s, f, f, 1, mults[i])
                visited[f] = False
        visited[s] = False
    return total


def permanent(rows: Sequence[int], n: int) -> int:
    """Ryser's formula over a Gray-code walk of column subsets.

    ``rows[i]`` is the bitmask of nonzero columns in row ``i``.
    """
    if n == 0:
        return 1
    cols = [[(rows[i] >> j) & 1 for i in range(n)] for j in range(n)]
    sums = [0] * n
    total = 0
    gray = 0
    for step in range(1, 1 << n):
        j = (step & -step).bit_length() - 1
        gray ^= 1 << j
        sign = 1 if (gray >> j) & 1 else -1
        col = cols[j]
        for i in range(n):
            sums[i] += sign * col[i]
        prod = 1
        for x in sums:
            if x == 0:
                prod = 0
                break
            prod *= x
        if prod:
            size = bin(gray).count("1")
            total += prod if (n - size) % 2 == 0 else -prod
    return total
