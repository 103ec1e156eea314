"""Compare the compiled and pure-Python counting kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Every case is run on each available backend; results must agree.
"""

from __future__ import annotations

import argparse
import sys
import timeit

from cyclebound import constructions as C
from cyclebound.graphcore import ZeroOneMatrix
from cyclebound.kernels import available_backends


def cases():
    for N in (6, 8, 9):
        G = C.k4_ring(N)
        yield f"cycles k4-ring N={N} (m={G.m})", "cycles", G.csr
    for n in (9, 10, 11):
        G = C.circulant(n, (1, 2, 3))
        yield f"cycles circulant {n} (1,2,3) (m={G.m})", "cycles", G.csr
    for m in (10, 14):
        G, s, t = C.ear_path(m)
        yield f"st_paths ear-path m={m}", "st_paths", (*G.csr, s, t)
    for n in (12, 16):
        M = ZeroOneMatrix.ones(n)
        yield f"permanent ones {n}x{n}", "permanent", (M.rows, n)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; timing the pure-Python backend only")
    names = sorted(backends)
    print(f"{'case':<40}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn, argv_ in cases():
        times, results = {}, set()
        for name in names:
            f = getattr(backends[name], fn)
            results.add(f(*argv_))
            times[name] = min(timeit.repeat(lambda: f(*argv_), number=1, repeat=args.repeat))
        if len(results) != 1:
            print(f"{label}: backends disagree: {results}", file=sys.stderr)
            return 1
        row = f"{label:<40}" + "".join(f"{times[n]*1e3:>10.2f}ms" for n in names)
        if len(names) > 1:
            row += f"{times['python'] / max(times['cython'], 1e-9):>11.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
