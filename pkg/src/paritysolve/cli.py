"""Command line interface: ``generate``, ``solve``, ``classify`` and ``bench``.

Exit codes: 0 success, 1 usage error, 2 solver precondition failed,
3 malformed input file.
"""
from __future__ import annotations

import argparse
import sys

from . import bench
from .families import FamilySpec, generate
from .game import EmptySuccessors, GameError, PreconditionError
from .pgsolver import ParseError, parse_pgsolver, write_pgsolver
from .special import classify

EXIT_USAGE, EXIT_PRECONDITION, EXIT_PARSE = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="paritysolve", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write a family game in PGSolver format")
    g.add_argument("--family", required=True, choices=sorted(bench.FAMILY_NAMES))
    g.add_argument("--n", required=True, type=_positive)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="-")

    s = sub.add_parser("solve", help="print both winning regions")
    s.add_argument("--algorithm", default="recursive", choices=list(bench.ALGORITHMS))
    s.add_argument("--stats", action="store_true")
    s.add_argument("file", nargs="?", default="-")

    c = sub.add_parser("classify", help="report weak / dull / solitaire flags")
    c.add_argument("file", nargs="?", default="-")

    b = sub.add_parser("bench", help="measure solvers over a range of family sizes")
    b.add_argument("--family", required=True, help="family name, or a comma separated list")
    b.add_argument("--min", type=_positive, required=True)
    b.add_argument("--max", type=_positive, required=True)
    b.add_argument("--algorithms", default="recursive,recursive-scc")
    b.add_argument("--csv", required=True, help="output file, '-' for stdout")
    b.add_argument("--timeout-seconds", type=float)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--plot", help="also render a log-scale figure to this file")
    b.add_argument("--plot-metric", choices=["runtime", "calls"], default="runtime")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _split(text: str, allowed, what: str) -> list[str]:
    items = [x.strip() for x in text.split(",") if x.strip()]
    bad = [x for x in items if x not in allowed]
    if bad or not items:
        raise UsageError(f"unknown {what}: {', '.join(bad) or '(none)'}")
    return items


def cmd_generate(args) -> int:
    game = generate(FamilySpec(bench.FAMILY_NAMES[args.family], args.n, args.seed))
    _write(args.out, write_pgsolver(game))
    return 0


def cmd_solve(args) -> int:
    game = parse_pgsolver(_read(args.file))
    sol = bench.ALGORITHMS[args.algorithm](game)
    even, odd = sol.partition()
    print("even:", *even)
    print("odd:", *odd)
    if args.stats:
        for k, v in sol.stats.as_dict().items():
            print(f"{k}: {v}")
    return 0


def cmd_classify(args) -> int:
    game = parse_pgsolver(_read(args.file))
    print("\n".join(classify(game).lines()))
    return 0


def cmd_bench(args) -> int:
    families = _split(args.family, bench.FAMILY_NAMES, "family")
    algorithms = _split(args.algorithms, bench.ALGORITHMS, "algorithm")
    if args.min > args.max:
        raise UsageError("--min must not exceed --max")

    def log(row):
        state = row.runtime_nanoseconds if not row.completed else f"{row.recursive_calls} calls"
        print(f"{row.family} n={row.n} {row.algorithm}: {state}", file=sys.stderr)

    rows = bench.run_bench(
        families, range(args.min, args.max + 1), algorithms, args.seed, args.timeout_seconds, log
    )
    if args.csv == "-":
        bench.write_csv(rows, sys.stdout)
    else:
        with open(args.csv, "w", newline="", encoding="utf-8") as f:
            bench.write_csv(rows, f)
    if args.plot:
        from .report import plot_bench

        plot_bench(rows, args.plot, args.plot_metric, title=", ".join(families))
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "solve": cmd_solve,
    "classify": cmd_classify,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, EmptySuccessors) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, GameError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
