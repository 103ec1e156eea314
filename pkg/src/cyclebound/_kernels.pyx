# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same contract as :mod:`cyclebound._pykernels`.  Counts accumulate in unsigned
128-bit integers; callers only route inputs here when the exact result is
known to be below 2**128 (path and cycle counts are at most 2**m, and a
permanent of an n x n 0/1 matrix is at most n!).  Ryser's alternating sum is
evaluated modulo 2**128, which is exact because the final value fits.
"""

cdef extern from *:
    """
    typedef unsigned __int128 cb_u128;
    static inline unsigned long long cb_hi(cb_u128 x) { return (unsigned long long)(x >> 64); }
    static inline unsigned long long cb_lo(cb_u128 x) { return (unsigned long long)x; }
    """
    ctypedef unsigned long long cb_u128
    unsigned long long cb_hi(cb_u128 x) nogil
    unsigned long long cb_lo(cb_u128 x) nogil

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

from libc.stdlib cimport calloc, free
from array import array


cdef object _to_py(cb_u128 x):
    return (int(cb_hi(x)) << 64) | int(cb_lo(x))


cdef struct Csr:
    const long long* indptr
    const long long* nbrs
    const long long* mults
    char* visited
    cb_u128 total


cdef void _paths(Csr* g, long long v, long long t, cb_u128 weight) noexcept nogil:
    cdef long long i, w
    for i in range(g.indptr[v], g.indptr[v + 1]):
        w = g.nbrs[i]
        if g.visited[w]:
            continue
        if w == t:
            g.total += weight * <cb_u128>g.mults[i]
            continue
        g.visited[w] = 1
        _paths(g, w, t, weight * <cb_u128>g.mults[i])
        g.visited[w] = 0


cdef void _cycles(Csr* g, long long s, long long first, long long v, int depth, cb_u128 weight) noexcept nogil:
    cdef long long i, w
    for i in range(g.indptr[v], g.indptr[v + 1]):
        w = g.nbrs[i]
        if w == s:
            if depth >= 2 and first < v:
                g.total += weight * <cb_u128>g.mults[i]
        elif w > s and not g.visited[w]:
            g.visited[w] = 1
            _cycles(g, s, first, w, depth + 1, weight * <cb_u128>g.mults[i])
            g.visited[w] = 0


def _buffers(indptr, nbrs, mults):
    return array("q", indptr), array("q", nbrs), array("q", mults)


def st_paths(indptr, nbrs, mults, long long s, long long t):
    if s == t:
        return 1
    cdef long long[::1] ip, nb, mu
    ip, nb, mu = _buffers(indptr, nbrs, mults)
    cdef long long n = ip.shape[0] - 1
    cdef Csr g
    g.indptr = &ip[0]
    g.nbrs = &nb[0] if nb.shape[0] else NULL
    g.mults = &mu[0] if mu.shape[0] else NULL
    g.visited = <char*>calloc(n, 1)
    g.total = 0
    if g.visited == NULL:
        raise MemoryError()
    g.visited[s] = 1
    with nogil:
        _paths(&g, s, t, 1)
    free(g.visited)
    return _to_py(g.total)


def cycles(indptr, nbrs, mults):
    cdef long long[::1] ip, nb, mu
    ip, nb, mu = _buffers(indptr, nbrs, mults)
    cdef long long n = ip.shape[0] - 1
    cdef long long s, i, f
    cdef Csr g
    g.indptr = &ip[0]
    g.nbrs = &nb[0] if nb.shape[0] else NULL
    g.mults = &mu[0] if mu.shape[0] else NULL
    g.visited = <char*>calloc(n if n > 0 else 1, 1)
    g.total = 0
    if g.visited == NULL:
        raise MemoryError()
    with nogil:
        for s in range(n):
            g.visited[s] = 1
            for i in range(g.indptr[s], g.indptr[s + 1]):
                f = g.nbrs[i]
                if f > s:
                    g.visited[f] = 1
                    _cycles(&g, s, f, f, 1, <cb_u128>g.mults[i])
                    g.visited[f] = 0
            g.visited[s] = 0
    free(g.visited)
    return _to_py(g.total)


def permanent(rows, int n):
    if n == 0:
        return 1
    if n > 63:
        raise ValueError("compiled permanent supports n <= 63")
    cdef unsigned long long[::1] masks = array("Q", rows)
    cdef long long sums[64]
    cdef cb_u128 total = 0, prod
    cdef unsigned long long gray = 0, step, limit = 1ULL << n
    cdef int i, j, size
    cdef long long sign
    for i in range(n):
        sums[i] = 0
    with nogil:
        step = 1
        while step < limit:
            j = __builtin_ctzll(step)
            gray ^= 1ULL << j
            sign = 1 if (gray >> j) & 1 else -1
            for i in range(n):
                if (masks[i] >> j) & 1:
                    sums[i] += sign
            prod = 1
            for i in range(n):
                if sums[i] == 0:
                    prod = 0
                    break
                prod *= <cb_u128>sums[i]
            if prod:
                size = __builtin_popcountll(gray)
                if (n - size) % 2 == 0:
                    total += prod
                else:
                    total -= prod
            step += 1
    return _to_py(total)
