"""Command-line interface.

Exit status: 0 success, 1 parse/IO/usage error, 2 invalid configuration
(the report is still printed), 3 a requested quantity is undefined.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import report as rep
from .ball_quotient import search_candidates
from .catalog import CATALOG_KEYS, catalog_lookup
from .config import parse_config, serialize
from .errors import KummerError

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_UNDEFINED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> tuple[int, int]:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"inverted range {text!r}")
    return lo, hi


def _load(source: str):
    if source == "-":
        return parse_config(sys.stdin.read())
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return parse_config(fh.read())
    return catalog_lookup(source)


def cmd_analyze(args) -> int:
    lo, hi = args.n_range
    if lo < 2:
        print("error: cover exponents start at 2", file=sys.stderr)
        return EXIT_INPUT
    cfg = _load(args.source)
    report = rep.build_report(cfg, (lo, hi))
    if args.format == "json":
        sys.stdout.write(rep.dumps(rep.report_to_json(report)))
    elif args.format == "csv":
        sys.stdout.write(rep.report_to_csv(report, args.precision))
    else:
        sys.stdout.write(rep.report_to_md(report, args.precision))
    if not report.validation.valid:
        return EXIT_INVALID
    if report.undefined_quantities:
        return EXIT_UNDEFINED
    return EXIT_OK


def cmd_search(args) -> int:
    rows = search_candidates(args.degree, args.curves, include_non_integral=args.all)
    if args.format == "json":
        sys.stdout.write(rep.dumps(rep.search_to_json(rows)))
    elif args.format == "csv":
        sys.stdout.write(rep.search_to_csv(rows))
        print(f"# {rep.search_summary(rows)}")
    else:
        sys.stdout.write(rep.search_to_md(rows))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        if args.format == "json":
            sys.stdout.write(rep.dumps(list(CATALOG_KEYS)))
        else:
            for key in CATALOG_KEYS:
                print(key)
        return EXIT_OK
    if not args.key:
        print("error: catalog show needs a key", file=sys.stderr)
        return EXIT_INPUT
    cfg = catalog_lookup(args.key)
    print(serialize(cfg, indent=2 if args.format == "md" else None))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kummercover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "md"), default="md")
        p.add_argument("--precision", type=int, default=4, help="decimals shown for rationals")

    p = sub.add_parser("analyze", help="full report for a configuration")
    p.add_argument("source", help="JSON file, '-' for stdin, or a catalog key such as 'L(3)'")
    p.add_argument("--n-range", type=parse_range, default=(2, 5), metavar="A..B")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="scan (d, tau) for double/six-fold candidate censuses")
    p.add_argument("--degree", "-d", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--curves", "--tau", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--all", action="store_true", help="also list non-integral rows")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="list or show named configurations")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("key", nargs="?")
    common(p)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KummerError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
