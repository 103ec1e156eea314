"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction

import mpmath

mpmath.mp.dps = 200


def rho():
    return (mpmath.mpf(4) / 3) ** (mpmath.mpf(1) / 4)


def b(k):
    if k <= 1:
        return mpmath.mpf(1)
    return (mpmath.factorial(k - 1) * rho()) ** (mpmath.mpf(1) / (k - 1))


def lam(k):
    return mpmath.log(b(k + 1) / b(k))


def alpha(k):
    r = rho()
    if k == 0:
        return mpmath.mpf(1)
    if k == 1:
        return mpmath.sqrt(2 / r**5)
    if k == 2:
        return 2 / r**3
    if k == 3:
        return 6 / (r**4 * b(3) * b(5))
    return alpha(k - 1) / (1 + k * (lam(k - 1) - lam(k)))


def a(k):
    return alpha(k) * b(k)


def phi(l, d):
    return rho() ** (l - 2) * b(l - d + 2)


def f(k, n, l):
    return k * alpha(k) * (mpmath.log(rho() ** (l - 1) * b(n + l) / b(n)) - l * lam(k))


def gamma_d(d):
    d = Fraction(d)
    d = mpmath.mpf(d.numerator) / d.denominator
    lo, hi = int(mpmath.floor(d)), int(mpmath.ceil(d))
    if lo == hi:
        return b(lo) ** (2 / d)
    return b(lo) ** (2 * (hi - d) / d) * b(hi) ** (2 * (d - lo) / d)


def contains(iv, x, slack=Fraction(0)) -> bool:
    """Interval contains the 200-digit value (up to its own rounding)."""
    q = Fraction(mpmath.nstr(x, 190))
    eps = Fraction(1, 10**150) + slack
    return iv.lo - eps <= q <= iv.hi + eps


# -- combinatorial oracles ---------------------------------------------------

def edge_copies(G):
    return [(u, v) for u, v, mult in G.edges for _ in range(mult)]


def _components(vertices, edges):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in vertices})


def brute_cycles(G) -> int:
    """Edge subsets whose every vertex has degree 0 or 2 and which are connected."""
    E = edge_copies(G)
    count = 0
    for r in range(2, len(E) + 1):
        for sub in itertools.combinations(range(len(E)), r):
            deg = {}
            for i in sub:
                u, v = E[i]
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            if _components(deg.keys(), [E[i] for i in sub]) == 1:
                count += 1
    return count


def brute_paths(G, s, t) -> int:
    """Edge subsets forming a single s-t path."""
    if s == t:
        return 1
    E = edge_copies(G)
    count = 0
    for r in range(1, len(E) + 1):
        for sub in itertools.combinations(range(len(E)), r):
            deg = {}
            for i in sub:
                u, v = E[i]
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if deg.get(s) != 1 or deg.get(t) != 1:
                continue
            if any(d != 2 for v, d in deg.items() if v not in (s, t)):
                continue
            if len(deg) == r + 1 and _components(deg.keys(), [E[i] for i in sub]) == 1:
                count += 1
    return count


def naive_permanent(rows) -> int:
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        p = 1
        for i, j in enumerate(perm):
            p *= rows[i][j]
            if not p:
                break
        total += p
    return total
