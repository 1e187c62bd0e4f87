"""Command-line entry point.

Exit codes: 0 all checks pass, 1 a verification/validation failed,
2 usage or input error, 3 resource limit hit.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import suites
from .exactsolver import SolverLimits, exact_treewidth, min_balanced_separator
from .formats import (
    FormatError,
    build_report,
    canonical_hash,
    dump_report,
    emit_gr,
    emit_td,
    read_gr,
    read_td,
)
from .kneser import (
    CapExceeded,
    InvalidParams,
    brute_force_alpha,
    build_graph,
    pencil_independent_set,
    validate_params,
    DEFAULT_ALPHA_CAP,
)
from .tdecomp import star_decomposition, validate_decomposition

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _kneser(args):
    try:
        return build_graph(validate_params(args.n, args.k, args.t))
    except InvalidParams as exc:
        raise UsageError(str(exc)) from None


def _load_graph(args):
    """A .gr path, or --n/--k/--t for a Kneser graph."""
    if getattr(args, "gr", None):
        try:
            return read_gr(args.gr)
        except (OSError, FormatError) as exc:
            raise UsageError(f"{args.gr}: {exc}") from None
    if None in (args.n, args.k, args.t):
        raise UsageError("give a .gr file or all of --n --k --t")
    kg = _kneser(args)
    try:
        return kg.graph
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None


def _write(path, text):
    Path(path).write_text(text)


def _finish_report(args, params, checks, solver=None, timings=None):
    report = build_report(__version__, ["knesertw"] + args.argv, params, checks, solver, timings)
    if getattr(args, "out", None):
        _write(args.out, dump_report(report))
    return report


def _solver_summary(res):
    return {
        "treewidth": res.treewidth,
        "exact": res.exact,
        "lower": res.lower,
        "upper": res.upper,
        "method": res.method,
        "nodes": res.stats.get("nodes", 0),
        "ordering": list(res.ordering),
    }


# -- subcommands --------------------------------------------------------------------

def cmd_graph(args):
    kg = _kneser(args)
    try:
        g = kg.graph
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None
    text = emit_gr(g, [f"generalized Kneser graph K({args.n},{args.k},{args.t})"])
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    if args.labels:
        rows = [f"{v + 1} {' '.join(map(str, kg.subset(v).elements))}" for v in range(kg.n)]
        _write(args.labels, "\n".join(rows) + "\n")
    return EXIT_OK


def cmd_solve(args):
    g = _load_graph(args)
    limits = SolverLimits(method=args.method, time_limit=args.time_limit)
    try:
        res = exact_treewidth(g, limits)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.td:
        _write(args.td, emit_td(res.certificate, g.n, [f"width {res.upper}"]))
    if res.exact:
        print(f"treewidth {res.treewidth}")
    else:
        print(f"timeout: treewidth in [{res.lower}, {res.upper}]")
    _finish_report(args, {"vertices": g.n, "method": res.method}, [], _solver_summary(res),
                   {"solve": res.stats["elapsed"]})
    return EXIT_OK if res.exact else EXIT_LIMIT


def cmd_validate(args):
    try:
        g = read_gr(args.gr)
        td, declared = read_td(args.td)
    except (OSError, FormatError) as exc:
        raise UsageError(str(exc)) from None
    if declared != g.n:
        raise UsageError(f"decomposition declares {declared} vertices, graph has {g.n}")
    rep = validate_decomposition(g, td)
    if rep.valid:
        print(f"valid, width {rep.width}")
        return EXIT_OK
    for v in rep.violations:
        print(v)
    return EXIT_FAIL


def cmd_alpha(args):
    g = _load_graph(args)
    try:
        size, witness = brute_force_alpha(g, cap=args.cap)
    except CapExceeded as exc:
        print(exc, file=sys.stderr)
        return EXIT_LIMIT
    print(f"alpha {size}")
    print("witness " + " ".join(str(v + 1) for v in witness))
    return EXIT_OK


def cmd_decompose(args):
    kg = _kneser(args)
    base = [int(x) for x in args.base.split(",")] if args.base else list(range(1, args.t + 1))
    try:
        pencil = pencil_independent_set(kg.params, base)
        g = kg.graph
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    td = star_decomposition(g, pencil)
    rep = validate_decomposition(g, td)
    text = emit_td(td, g.n, [f"star decomposition of K({args.n},{args.k},{args.t}), pencil on {base}"])
    if args.output:
        _write(args.output, text)
    print(f"width {rep.width}" + ("" if rep.valid else " (INVALID)"))
    return EXIT_OK if rep.valid else EXIT_FAIL


def cmd_separator(args):
    g = _load_graph(args)
    try:
        p = Fraction(args.p)
        res = min_balanced_separator(g, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"min {p}-separator size {len(res.separator)}")
    print("separator " + " ".join(str(v + 1) for v in res.separator))
    return EXIT_OK


def cmd_verify(args):
    start = time.perf_counter()
    try:
        checks, lines, ok = suites.run_suite(args.suite, args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for line in lines:
        print(line)
    params = {k: getattr(args, k) for k in ("n", "k", "t", "c", "horizon") if getattr(args, k, None) is not None}
    params["suite"] = args.suite
    _finish_report(args, params, checks, None, {"verify": time.perf_counter() - start})
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_report(args):
    """Bundle the quick suites and the small solver runs into one report."""
    timings = {}
    checks = []
    ok = True
    plan = [
        ("thresholds", argparse.Namespace(c="1..4")),
        ("cases", argparse.Namespace(t="2..24", horizon=200)),
        ("f", argparse.Namespace(k="2..12", n="1..80")),
        ("theorem9", argparse.Namespace(n="36", k="3", t="2")),
        ("lemma5", argparse.Namespace(n="2..30" if args.full else "2..14")),
    ]
    for name, ns in plan:
        start = time.perf_counter()
        c, lines, good = suites.run_suite(name, ns)
        timings[name] = time.perf_counter() - start
        checks.extend(c)
        ok = ok and good
        print(f"{name}: {'PASS' if good else 'FAIL'}")
    solver = {}
    for n, k, t in [(5, 2, 1), (5, 3, 2), (6, 3, 2)]:
        g = build_graph(validate_params(n, k, t)).graph
        res = exact_treewidth(g)
        timings[f"solve K({n},{k},{t})"] = res.stats["elapsed"]
        solver[f"K({n},{k},{t})"] = _solver_summary(res)
        print(f"K({n},{k},{t}): treewidth {res.treewidth}")
    report = _finish_report(args, {"full": args.full}, checks, solver, timings)
    print(f"canonical sha256 {canonical_hash(report)}")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knesertw", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def nkt(p, required=True):
        p.add_argument("--n", type=int, required=required)
        p.add_argument("--k", type=int, required=required)
        p.add_argument("--t", type=int, required=required)

    p = sub.add_parser("graph", help="write K(n,k,t) in PACE .gr format")
    nkt(p)
    p.add_argument("-o", "--output")
    p.add_argument("--labels", help="write a rank -> subset table here")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("solve", help="exact treewidth with a .td certificate")
    p.add_argument("gr", nargs="?")
    nkt(p, required=False)
    p.add_argument("--td", help="write the certificate here")
    p.add_argument("--method", default="auto", choices=["auto", "subset-dp", "branch-and-bound"])
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--out", help="JSON report path")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", help="check a .td against a .gr")
    p.add_argument("gr")
    p.add_argument("td")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("alpha", help="brute-force independence number")
    p.add_argument("gr", nargs="?")
    nkt(p, required=False)
    p.add_argument("--cap", type=int, default=DEFAULT_ALPHA_CAP)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("decompose", help="star decomposition from a point pencil")
    nkt(p)
    p.add_argument("--base", help="comma-separated t-set, default 1..t")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("separator", help="minimum balanced p-separator")
    p.add_argument("gr", nargs="?")
    nkt(p, required=False)
    p.add_argument("--p", default="2/3")
    p.set_defaults(func=cmd_separator)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=suites.SUITES)
    for flag in ("n", "k", "t", "c"):
        p.add_argument(f"--{flag}", help="value, a..b, or comma list")
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--out", help="JSON report path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="combined verification and solver report")
    p.add_argument("--full", action="store_true", help="lemma5 sweep through n = 30")
    p.add_argument("--out", help="JSON report path")
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.argv = argv
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
