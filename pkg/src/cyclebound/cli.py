"""Command-line front end.

Exit codes: 0 ok, 1 a claim FAILED, 2 unreadable or malformed input,
3 invalid vertex, 4 invalid family size, 5 UNDECIDED at the precision cap,
6 census over the enumeration budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from . import constructions as C
from .bounds import expr as X
from .bounds.certreal import Outcome, render_down, render_up
from .graphcore import (
    GraphFormatError,
    count_cycles,
    count_st_paths,
    cycle_bound_report,
    path_bound_expr,
    read_graph,
    serialize_graph,
)
from .verify import SUITE_NAMES, VerifyConfig, exit_status, run_full_certification

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_VERTEX, EXIT_SIZE, EXIT_UNDECIDED, EXIT_BUDGET = range(7)

CENSUS_MAX_EDGES = 40
CENSUS_COLUMNS = (
    "family", "size", "n", "m", "avg_degree", "cycles", "paths",
    "bound_gamma_m", "bound_avgdeg", "bound_bregman", "bound_multi",
    "certified", "growth_rate", "gamma_d_vs_kappa1",
)

BOUND_HELP = (
    "Bound columns print the upper endpoint of the certified interval, "
    "so every printed bound is itself a valid upper bound."
)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_INPUT) from None
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from None


def _vertex(G, v: int) -> int:
    if not G.has_vertex(v):
        raise CliError(f"vertex {v} is not in 0..{G.n - 1}", EXIT_VERTEX)
    return v


def _digits(prec: int) -> int:
    return max(6, math.ceil(prec * math.log10(2)) + 1)


# -- subcommands ---------------------------------------------------------------

def cmd_bound(args) -> int:
    G = _load(args.graph)
    s = _vertex(G, args.source)
    if args.prime and G.simple:
        degs = G.degrees()
        q = X.q_multi(degs[s], [d for v, d in enumerate(degs) if v != s])
    else:
        q = path_bound_expr(G, s)
    name = "q'" if (args.prime or not G.simple) else "q"
    prec = args.prec or X.default_prec()
    iv = q.interval(prec)
    digits = _digits(prec)
    ex = q.exact()
    r = None if ex is None else ex.as_rational()
    lo, hi = (max(iv.lo, r), min(iv.hi, r)) if r is not None else (iv.lo, iv.hi)
    suffix = f" (exactly {r})" if r is not None else ""
    print(f"{name}_{s} = [{render_down(lo, digits)}, {render_up(hi, digits)}]{suffix}")
    return EXIT_OK


def cmd_count(args) -> int:
    G = _load(args.graph)
    if args.cycles:
        print(count_cycles(G))
    else:
        s, t = (_vertex(G, v) for v in args.paths)
        print(count_st_paths(G, s, t))
    return EXIT_OK


def _spec(family: str, size: int, offsets: Optional[Sequence[int]]) -> C.FamilySpec:
    fam = C.parse_family(family)
    extra = tuple(offsets) if (offsets and fam is C.Family.CIRCULANT) else ()
    return C.FamilySpec(fam, size, extra)


def cmd_construct(args) -> int:
    try:
        G = _spec(args.family, args.size, args.offsets).build()
    except C.SizeError as exc:
        raise CliError(str(exc), EXIT_SIZE) from None
    text = serialize_graph(G)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror or exc}", EXIT_INPUT) from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = SUITE_NAMES if args.suite == "all" else (args.suite,)
    cfg = VerifyConfig(seed=args.seed, prec=args.prec, max_prec=args.max_prec, suites=suites)
    if args.samples is not None:
        cfg.samples = args.samples
        cfg.graph_samples = min(args.samples, cfg.graph_samples)
    report = run_full_certification(cfg)
    if args.report:
        try:
            report.write(args.report, include_elapsed=args.timing)
        except OSError as exc:
            raise CliError(f"cannot write {args.report}: {exc.strerror or exc}", EXIT_INPUT) from None
    sys.stdout.write(report.summary())
    return exit_status(report)


def _parse_sizes(text: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise CliError(f"sizes must look like A..B, got {text!r}", EXIT_SIZE) from None
    if lo > hi:
        raise CliError(f"empty size range {text!r}", EXIT_SIZE)
    return list(range(lo, hi + 1))


def _kappa_side(d: Fraction, prec: int, cap: int) -> str:
    kappa1 = X.Pow(X.Const(2) + X.Const(2) * X.sqrt(2), Fraction(1, 5))
    v = X.certify(X.gamma_d(d), ">", kappa1, prec, cap)
    side = {Outcome.TRUE: "above", Outcome.FALSE: "below", Outcome.UNDECIDED: "undecided"}[v.outcome]
    inside = Fraction(424, 100) < d < Fraction(718, 100)
    return f"{side}{' (4.24<d<7.18)' if inside else ''}"


def census_rows(family: str, sizes: Sequence[int], offsets=None, prec: Optional[int] = None,
                max_prec: Optional[int] = None) -> list[dict]:
    specs = []
    for size in sizes:
        try:
            spec = _spec(family, size, offsets)
            G = spec.build()
        except C.SizeError as exc:
            raise CliError(str(exc), EXIT_SIZE) from None
        if G.m > CENSUS_MAX_EDGES:
            raise CliError(f"{spec.label} has {G.m} edges; the census budget is m <= {CENSUS_MAX_EDGES}", EXIT_BUDGET)
        specs.append((spec, G))
    p = prec or X.default_prec()
    cap = max_prec if max_prec is not None else (X.MAX_PREC if prec is None else prec)
    rows = []
    prev = None
    for spec, G in specs:
        res = cycle_bound_report(G, p, cap)
        d = Fraction(2 * G.m, G.n)
        row = {k: "" for k in CENSUS_COLUMNS}
        row.update(family=spec.family.value, size=spec.size, n=G.n, m=G.m, avg_degree=str(d), cycles=res.count)
        if spec.family is C.Family.EAR_PATH:
            row["paths"] = count_st_paths(G, 0, spec.size)
        for name, col in (("gamma_m", "bound_gamma_m"), ("avgdeg", "bound_avgdeg"), ("bregman", "bound_bregman"), ("multi", "bound_multi")):
            r = res.row(name)
            if r is not None:
                row[col] = r.upper
        row["certified"] = {Outcome.TRUE: "yes", Outcome.FALSE: "NO", Outcome.UNDECIDED: "undecided"}[res.outcome]
        if prev is not None and prev[0] > 0 and res.count > 0 and G.m != prev[1]:
            row["growth_rate"] = f"{math.log(res.count / prev[0]) / (G.m - prev[1]):.6f}"
        if G.simple:
            row["gamma_d_vs_kappa1"] = _kappa_side(d, p, cap)
        prev = (res.count, G.m)
        rows.append(row)
    return rows


def cmd_census(args) -> int:
    rows = census_rows(args.family, _parse_sizes(args.sizes), args.offsets, args.prec, args.max_prec)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CENSUS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror or exc}", EXIT_INPUT) from None
    else:
        sys.stdout.write(buf.getvalue())
    bad = [r for r in rows if r["certified"] != "yes"]
    if any(r["certified"] == "NO" for r in bad):
        return EXIT_FAILED
    return EXIT_UNDECIDED if bad else EXIT_OK


# -- parser ---------------------------------------------------------------------

def _offsets(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"offsets must be comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("precision must be at least 2 bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclebound",
        description="Certified degree-sequence bounds on path and cycle counts.",
        epilog="Precision defaults to $CYCLEBOUND_PREC or 128 bits and escalates to 1024; "
        "an explicit --prec is used as a fixed precision unless --max-prec is given.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="print the certified path bound q_s (or q'_s)")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--source", required=True, type=int, help="source vertex")
    p.add_argument("--prime", action="store_true", help="use the multigraph bound q'_s")
    p.add_argument("--prec", type=_positive, help="precision in bits")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("count", help="count s-t paths or cycles exactly")
    p.add_argument("--graph", required=True, help="edge-list file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--paths", nargs=2, type=int, metavar=("S", "T"))
    g.add_argument("--cycles", action="store_true")
    p.set_defaults(func=cmd_count)

    families = ", ".join(f.value for f in C.Family)
    p = sub.add_parser("construct", help="write an edge list for a construction family")
    p.add_argument("--family", required=True, help=families)
    p.add_argument("--size", required=True, type=int)
    p.add_argument("--offsets", type=_offsets, help="circulant offsets, e.g. 1,2 (default 1,2)")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run certification suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITE_NAMES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="random tuples per inequality family")
    p.add_argument("--prec", type=_positive, help="precision in bits")
    p.add_argument("--max-prec", type=_positive, help="escalation cap in bits")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--timing", action="store_true", help="include elapsed time in the JSON report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="CSV of exact cycle counts against certified bounds", description=BOUND_HELP)
    p.add_argument("--family", required=True, help=families)
    p.add_argument("--sizes", required=True, help="size range A..B")
    p.add_argument("--offsets", type=_offsets, help="circulant offsets (default 1,2)")
    p.add_argument("--prec", type=_positive, help="precision in bits")
    p.add_argument("--max-prec", type=_positive, help="escalation cap in bits")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"cyclebound: error: {exc}", file=sys.stderr)
        return exc.code
    except C.SizeError as exc:
        print(f"cyclebound: error: {exc}", file=sys.stderr)
        return EXIT_SIZE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
