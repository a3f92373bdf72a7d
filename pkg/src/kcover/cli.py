"""``kcover`` command line: gen | solve | sweep | verify.

Exit codes: 0 success, 1 usage or I/O error, 2 a mathematical claim failed.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import coverage
from .bounds import bound_certify
from .corpus import run_verify
from .coverage import Method
from .edgelist import read_graph, save_edge_list, write_graph
from .errors import BudgetExceeded, DomainError, EdgeListError, GenerationFailed, KCoverError
from .generators import gen_clique_plus_isolated, gen_gnp, gen_regular
from .graph import union_coverage
from .lemma import sweep_lemma
from .report import SCHEMA, certificate_dict, dumps, graph_stats, solution_dict, sweep_dict

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def int_range(text: str) -> tuple[int, int]:
    """``"a..b"`` or a single integer ``"a"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 2..5, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/4, got {text!r}") from None


def _emit(report: dict) -> None:
    sys.stdout.write(dumps(report))


def cmd_gen(args) -> int:
    if args.family == "gnp":
        if args.p is None:
            raise UsageError("--p is required for family gnp")
        g = gen_gnp(args.n, args.p, args.seed)
        params = {"p": args.p, "seed": args.seed}
    elif args.family == "clique-isolated":
        if args.c is None:
            raise UsageError("--c is required for family clique-isolated")
        g = gen_clique_plus_isolated(args.n, args.c)
        params = {"c": f"{args.c.numerator}/{args.c.denominator}"}
    else:
        if args.d is None:
            raise UsageError("--d is required for family regular")
        g = gen_regular(args.n, args.d, args.seed)
        params = {"d": args.d, "seed": args.seed}
    stats = {"schema": SCHEMA, "kind": "gen", "family": args.family, "params": params, "graph": graph_stats(g)}
    if args.out:
        write_graph(g, args.out)
        stats["out"] = args.out
        _emit(stats)
    else:
        sys.stdout.write(save_edge_list(g) + "\n")
        sys.stderr.write(dumps(stats))
    return EXIT_OK


def _parse_methods(text: str) -> list[Method]:
    if text == "all":
        return list(Method)
    try:
        return [Method(m.strip()) for m in text.split(",") if m.strip()]
    except ValueError:
        raise UsageError(f"unknown method in {text!r}; choose from {[m.value for m in Method]}") from None


def cmd_solve(args) -> int:
    methods = _parse_methods(args.methods)
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    g = read_graph(args.input)
    results = []
    derand_ok = True
    for method in methods:
        start = time.perf_counter()
        try:
            if method is Method.EXACT:
                sol = coverage.exact_best(g, args.k, budget=args.budget)
            elif method is Method.MONTE_CARLO:
                sol = coverage.monte_carlo(g, args.k, args.trials, args.seed)
            else:
                sol = coverage.SOLVERS[method](g, args.k)
        except (BudgetExceeded, DomainError) as exc:
            results.append({"method": method.value, "error": str(exc), "error_kind": type(exc).__name__})
            continue
        elapsed = (time.perf_counter() - start) * 1000
        if union_coverage(g, sol.vertices) != sol.covered:
            raise KCoverError(f"{method.value}: coverage recount mismatch")
        entry = solution_dict(sol)
        cert = bound_certify(g, args.k, sol.covered)
        entry["certificate"] = certificate_dict(cert)
        if not args.no_timings:
            entry["time_ms"] = round(elapsed, 3)
        if method is Method.DERANDOMIZED and not cert.verdict:
            derand_ok = False
        results.append(entry)
    report = {
        "schema": SCHEMA,
        "kind": "solve",
        "input": {"path": args.input},
        "k": args.k,
        "graph": graph_stats(g),
        "results": results,
        "derandomized_ok": derand_ok,
    }
    _emit(report)
    return EXIT_OK if derand_ok else EXIT_VIOLATION


def cmd_sweep(args) -> int:
    lo, hi = args.k if args.k else (args.k_min, args.k_max)
    if lo < 2:
        raise UsageError("k range must start at 2 or more")
    rep = sweep_lemma(range(lo, hi + 1), args.c_points, args.s_points, args.tol)
    _emit(sweep_dict(rep))
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_verify(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    if args.n[0] < 1 or args.k[0] < 1:
        raise UsageError("n and k ranges must be positive")
    start = time.perf_counter()
    report = run_verify(args.count, args.n, args.k, args.seed, args.exact_max_n, args.extremal)
    if not args.no_timings:
        report["time_ms"] = round((time.perf_counter() - start) * 1000, 3)
    _emit(report)
    return EXIT_OK if report["ok"] else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kcover", description="k-neighborhood coverage solver and checks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a graph and write it as an edge list")
    p.add_argument("--family", required=True, choices=["gnp", "clique-isolated", "regular"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, help="edge probability (gnp)")
    p.add_argument("--c", type=rational_arg, help="target density as a rational (clique-isolated)")
    p.add_argument("--d", type=int, help="degree (regular)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="edge-list path; stdout if omitted")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="run coverage solvers on an edge-list file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--methods", default="derandomized", help="comma list or 'all'")
    p.add_argument("--budget", type=int, default=coverage.DEFAULT_BUDGET)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="grid check of F(s) >= min{G(c), sqrt(c)}")
    p.add_argument("--k", type=int_range, help="range like 2..10 (overrides --k-min/--k-max)")
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--c-points", type=int, default=199)
    p.add_argument("--s-points", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="batch-check the coverage guarantee on a seeded corpus")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--n", type=int_range, default=(8, 64))
    p.add_argument("--k", type=int_range, default=(2, 5))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--exact-max-n", type=int, default=16, help="run the exhaustive oracle up to this n")
    p.add_argument("--extremal", action="store_true", help="append clique, regular, complete and empty graphs")
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"kcover: error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, GenerationFailed, EdgeListError, OSError) as exc:
        sys.stderr.write(f"kcover: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
