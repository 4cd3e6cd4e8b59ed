"""Command-line interface.

Subcommands: count (one exact value), table (parameter grids as CSV/JSON),
enumerate (canonical codes, one per line), verify (self-check suite),
render (SVG diagram), fetch (reference sequences), bijection (marked-graph
JSON for a matching).  Every output that stores canonical codes carries a
grammar version header.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bijections import graph_to_json, to_graph
from .counting import count_circular, count_endpoints, count_necklace, count_total
from .enumeration import enumerate_matchings
from .errors import BudgetExceededError, CodeParseError, ReferenceMismatchError
from .model import parse_code
from .refdata import fetch_sequence
from .render import render_svg
from .tables import table_ann, table_maximal, table_total
from .verify import run_all, summarize

__all__ = ["CODE_GRAMMAR", "main"]

CODE_GRAMMAR = "annular-code/v1"


def _fail(message: str) -> int:
    print(f"annular: {message}", file=sys.stderr)
    return 2


def _parse_range(text: str) -> tuple[int, int]:
    """'A..B' -> (A, B); a single integer N -> (0, N)."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        bounds = (int(lo), int(hi))
    else:
        bounds = (0, int(text))
    if bounds[0] < 0 or bounds[1] < bounds[0]:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return bounds


def _cmd_count(args: argparse.Namespace) -> int:
    picked = [
        args.outer is not None or args.inner is not None,
        args.total is not None,
        args.circular is not None,
        args.necklace is not None,
    ]
    if sum(picked) != 1:
        return _fail(
            "choose exactly one query: --outer/--inner, --total, --circular, or --necklace"
        )
    if args.crosscuts is not None and not picked[0]:
        return _fail("--crosscuts only applies to an --outer/--inner query")

    if picked[0]:
        if args.outer is None or args.inner is None:
            return _fail("--outer and --inner go together")
        if args.outer < 0 or args.inner < 0 or (args.crosscuts or 0) < 0:
            return _fail("endpoint and cross-cut counts must be non-negative")
        query: dict = {"outer": args.outer, "inner": args.inner}
        if args.crosscuts is not None:
            query["crosscuts"] = args.crosscuts
        value = count_endpoints(args.outer, args.inner, args.crosscuts)
    elif args.total is not None:
        if args.total < 0:
            return _fail("--total must be non-negative")
        query = {"total": args.total}
        value = count_total(args.total)
    elif args.circular is not None:
        query = {"circular": args.circular}
        try:
            value = count_circular(args.circular)
        except ValueError as exc:
            return _fail(str(exc))
    else:
        try:
            n1_text, n2_text = args.necklace.split(",")
            n1, n2 = int(n1_text), int(n2_text)
        except ValueError:
            return _fail(f"--necklace wants 'N1,N2', got {args.necklace!r}")
        query = {"necklace": [n1, n2]}
        try:
            value = count_necklace(n1, n2)
        except ValueError as exc:
            return _fail(str(exc))

    if args.json:
        print(json.dumps({"query": query, "value": value}, sort_keys=True))
    else:
        print(value)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.kind == "maximal":
        table = table_maximal(args.n or (0, 10), args.k or (0, 10))
    elif args.kind == "ann":
        table = table_ann(args.max if args.max is not None else 12)
    else:
        table = table_total(args.max if args.max is not None else 13)
    if args.format == "json":
        print(table.to_json())
    else:
        sys.stdout.write(table.to_csv(include_zeros=args.zeros))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 0 or args.m < 0 or args.k < 0:
        return _fail("--n, --m, --k must be non-negative")
    try:
        codes = sorted(m.encode() for m in enumerate_matchings(args.n, args.m, args.k))
    except BudgetExceededError as exc:
        print(f"annular: {exc}", file=sys.stderr)
        return 3
    print(f"# {CODE_GRAMMAR} enumerate n={args.n} m={args.m} k={args.k}")
    for code in codes:
        print(code)
    print(f"total {len(codes)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_all(max_endpoints=args.max_endpoints, sequences=args.sequences)
    text, ok = summarize(results)
    print(text)
    return 0 if ok else 1


def _cmd_render(args: argparse.Namespace) -> int:
    try:
        matching = parse_code(args.code)
    except CodeParseError as exc:
        return _fail(str(exc))
    document = render_svg(matching)
    if args.output:
        Path(args.output).write_text(document)
    else:
        sys.stdout.write(document)
    return 0


def _cmd_fetch(args: argparse.Namespace) -> int:
    try:
        seq = fetch_sequence(args.id)
    except ValueError as exc:
        return _fail(str(exc))
    except ReferenceMismatchError as exc:
        print(f"annular: {exc}", file=sys.stderr)
        return 1
    print(f"# {seq.id} source={seq.source} offset={seq.offset} values={len(seq)}")
    for index, value in enumerate(seq.values, start=seq.offset):
        print(index, value)
    return 0


def _cmd_bijection(args: argparse.Namespace) -> int:
    try:
        matching = parse_code(args.code)
    except CodeParseError as exc:
        return _fail(str(exc))
    try:
        graph = to_graph(matching)
    except ValueError as exc:
        return _fail(str(exc))
    document = graph_to_json(graph) + "\n"
    if args.output:
        Path(args.output).write_text(document)
    else:
        sys.stdout.write(document)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annular",
        description="Exact counting, enumeration, and rendering of annulus matchings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print one exact count")
    p.add_argument("--outer", type=int, help="outer-boundary endpoint count")
    p.add_argument("--inner", type=int, help="inner-boundary endpoint count")
    p.add_argument("--crosscuts", type=int, help="restrict to exactly this many cross-cuts")
    p.add_argument("--total", type=int, help="total endpoint count, any split")
    p.add_argument("--circular", type=int, help="one-circle matchings of this order, up to rotation")
    p.add_argument("--necklace", metavar="N1,N2", help="binary necklaces with N1+N2 beads")
    p.add_argument("--json", action="store_true", help="emit {query, value} JSON")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="grids of counts as CSV or JSON")
    p.add_argument("kind", choices=["maximal", "ann", "total"])
    p.add_argument("--n", type=_parse_range, metavar="A..B", help="row range (maximal)")
    p.add_argument("--k", type=_parse_range, metavar="A..B", help="column range (maximal)")
    p.add_argument("--max", type=int, help="axis bound (ann, total)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--zeros", action="store_true", help="print zero cells instead of blanks")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("enumerate", help="list canonical codes")
    p.add_argument("--n", type=int, required=True, help="outer half-circles")
    p.add_argument("--m", type=int, required=True, help="inner half-circles")
    p.add_argument("--k", type=int, required=True, help="cross-cuts")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("--max-endpoints", type=int, default=12)
    p.add_argument("--sequences", action="store_true", help="also check bundled snapshots")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="render a matching as SVG")
    p.add_argument("--code", required=True, help="canonical matching code")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("fetch", help="print a reference sequence (b-file lines)")
    p.add_argument("--id", required=True, help="sequence identifier, e.g. A003239")
    p.set_defaults(func=_cmd_fetch)

    p = sub.add_parser("bijection", help="marked-graph JSON for a matching")
    p.add_argument("--code", required=True, help="canonical matching code")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_bijection)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
