"""Command-line front end.

::

    exact-reals eval --digits 50 "sqrt(2) * pi"
    exact-reals eval --digits 50 --file expr.txt
    exact-reals bench --suite table1 --digits 1000

Exit status: 0 success, 1 parse error, 2 domain or separation error,
3 usage error.
"""

import argparse
import re
import sys
from fractions import Fraction
from typing import List, Optional

from .bench import SUITES, run_benchmarks
from .creal import DEFAULT_MAX_HALVINGS, DomainError, SeparationError
from .elementary import SERIES_RADIUS
from .expr import ParseError, evaluate, parse
from .output import format_digits

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_radius(text: str) -> Fraction:
    """Accept ``2^-K`` or a plain rational such as ``1/1024``."""
    m = re.fullmatch(r"\s*2\s*\^\s*-\s*(\d+)\s*", text)
    try:
        r = Fraction(1, 2 ** int(m.group(1))) if m else Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid radius {text!r}")
    if not 0 < r <= Fraction(1, 2):
        raise argparse.ArgumentTypeError("radius must lie in (0, 1/2]")
    return r


def _non_negative(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="exact-reals", description="Exact real arithmetic to any number of digits.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate an expression")
    ev.add_argument("expression", nargs="?")
    ev.add_argument("--file", help="read the expression from a file")
    ev.add_argument("--digits", type=_non_negative, default=20)
    ev.add_argument("--raw", action="store_true", help="print as MANTISSAx10^-DIGITS")
    ev.add_argument("--max-halvings", type=_non_negative, default=DEFAULT_MAX_HALVINGS,
                    help="cap on gauge halvings when separating a value from zero")
    ev.add_argument("--radius", type=parse_radius, default=SERIES_RADIUS,
                    help="series shrinking threshold, e.g. 2^-51")

    bn = sub.add_parser("bench", help="run a benchmark suite")
    bn.add_argument("--suite", choices=sorted(SUITES), default="table1")
    bn.add_argument("--digits", type=_non_negative, default=1000)
    return parser


def _read_expression(args) -> str:
    if (args.expression is None) == (args.file is None):
        raise UsageError("give exactly one of EXPRESSION or --file")
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}")
    return args.expression


def _eval(args) -> int:
    source = _read_expression(args)
    try:
        expr = parse(source)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        out = format_digits(evaluate(expr, args.radius, args.max_halvings), args.digits)
    except (DomainError, SeparationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(out.raw() if args.raw else out)
    return EXIT_OK


def _bench(args) -> int:
    for result in run_benchmarks(args.suite, args.digits):
        print(result.line(), flush=True)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    # deeply nested expressions recurse through the closures
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    try:
        args = build_parser().parse_args(argv)
        if args.command == "eval":
            return _eval(args)
        return _bench(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
