"""Command-line entry point.

    dyckmat dyck --len 8
    dyckmat build --m 3 --n 6 [--anchor 1100] [--index 5]
    dyckmat verify --m 3 --n 7
    dyckmat count --m 3 --n 6
    dyckmat table --m-max 10 --n-max 10 --format csv
    dyckmat expand --m 3 --n 8 --anchor 101010 --search
    dyckmat expand --m 3 --n 8 --anchor 101010 --x 11111100
    dyckmat rows --n 8 --anchor 111000

Exit codes: 0 success, 1 verification or cross-check failure, 2 usage
error, 3 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import census, expand, overlap, setgen
from .errors import ResourceLimitError
from .words import DEFAULT_DYCK_LIMIT, enumerate_dyck

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _spec(args: argparse.Namespace, m: int | None = None) -> setgen.SetSpec:
    m = args.m if m is None else m
    first_row = getattr(args, "first_row", None)
    if first_row:
        return setgen.SetSpec.from_first_row(m, args.n, first_row, strict=False)
    if args.anchor:
        return setgen.SetSpec(m, args.n, args.anchor)
    return setgen.SetSpec.default(m, args.n)


def _set_limit(args: argparse.Namespace) -> int:
    return args.limit if args.limit is not None else setgen.DEFAULT_SET_LIMIT


def cmd_dyck(args: argparse.Namespace) -> int:
    limit = args.limit if args.limit is not None else DEFAULT_DYCK_LIMIT
    for w in enumerate_dyck(args.len, limit=limit):
        print(w)
    return EXIT_OK


def cmd_build(args: argparse.Namespace) -> int:
    spec = _spec(args)

    def emit(a: setgen.BinaryMatrix) -> str:
        if args.by_columns:
            a = a.transpose()
        if args.format == "json":
            return setgen.matrix_to_json(a, spec) + "\n"
        return a.to_text()

    if args.index is not None:
        sys.stdout.write(emit(setgen.unrank(spec, args.index)))
        return EXIT_OK
    if args.format == "json":
        for a in setgen.enumerate_set(spec, limit=_set_limit(args)):
            sys.stdout.write(emit(a))
    else:
        sys.stdout.write("\n".join(emit(a) for a in setgen.enumerate_set(spec, limit=_set_limit(args))))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    spec = _spec(args)
    start = time.perf_counter()
    members = list(setgen.enumerate_set(spec, limit=_set_limit(args)))
    report = overlap.verify_set(members, fail_fast=args.fail_fast)
    print(f"verified {len(members)} matrices in {time.perf_counter() - start:.3f}s", file=sys.stderr)
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"{'pass' if report.passed else 'FAIL'} {spec.m}x{spec.n} size={len(members)} checked_pairs={report.checked_pairs}")
        for v in report.violations:
            w = v.witness
            print(f"  {v.a} {v.b} dr={w.offset.dr} dc={w.offset.dc} {w.kind}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _report_dict(r: census.CountReport) -> dict:
    return {
        "m": r.m,
        "n": r.n,
        "formula": r.formula_value,
        "enumerated": r.enumerated_value,
        "table": census.format_printed(r.table_value) or None,
        "agrees": str(r.agrees),
        "table_match": r.table_match,
        "note": r.note,
    }


def cmd_count(args: argparse.Namespace) -> int:
    report = census.cross_check(_spec(args), limit=_set_limit(args))
    if args.format == "json":
        print(json.dumps(_report_dict(report)))
    elif args.format == "csv":
        sys.stdout.write(census.render_csv([report]))
    else:
        print(report.formula_value)
        row = report.as_row()
        print(" ".join(f"{k}={v}" for k, v in row.items() if k not in ("m", "n")))
        if report.note:
            print(f"note: {report.note}")
    return EXIT_OK if report.documented else EXIT_FAIL


def cmd_table(args: argparse.Namespace) -> int:
    cells = census.emit_table(args.m_max, args.n_max, max_bits=args.max_bits, enumerate_limit=args.enumerate_limit)
    if args.format == "csv":
        sys.stdout.write(census.render_csv(cells))
    elif args.format == "json":
        print(json.dumps([_report_dict(c) for c in cells]))
    else:
        sys.stdout.write(census.render_text(cells))
    return EXIT_OK if all(c.documented for c in cells) else EXIT_FAIL


def cmd_expand(args: argparse.Namespace) -> int:
    limit = args.limit if args.limit is not None else expand.DEFAULT_SCAN_LIMIT
    if args.sweep:
        for first, count in expand.sweep_anchors(args.n, limit=limit):
            print(f"{first} {count}")
        return EXIT_OK
    spec = _spec(args)
    if args.x is not None:
        report = expand.verify_expansion(spec, args.x, limit=_set_limit(args))
        print(report.to_json())
        return EXIT_OK if report.passed else EXIT_FAIL
    for x in expand.find_expansion_strings(spec, limit=limit):
        print(x)
    return EXIT_OK


def cmd_rows(args: argparse.Namespace) -> int:
    limit = args.limit if args.limit is not None else expand.DEFAULT_SCAN_LIMIT
    spec = _spec(args, m=2)
    for s, kind in expand.find_compatible_rows(spec, limit=limit):
        print(f"{s} {kind}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one-line reason, exit 2
        print(f"usage error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dyckmat", description="Non-overlapping binary matrices from Dyck words.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, need_m: bool = True, formats=("text", "json")) -> None:
        if need_m:
            p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--anchor", help="u (even n) or type-alpha v (odd n)")
        p.add_argument("--first-row", help="arbitrary first row, not checked against the construction")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--limit", type=int, help="override the enumeration guard")

    p = sub.add_parser("dyck", help="list Dyck words of a given length")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("build", help="print one member (--index) or stream the whole set")
    common(p)
    p.add_argument("--index", "--seed-index", dest="index", type=int)
    p.add_argument("--by-columns", action="store_true", help="transpose output matrices")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check the generated set for overlaps")
    common(p)
    p.add_argument("--fail-fast", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="formula vs enumeration vs published table")
    common(p, formats=("text", "json", "csv"))
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="reproduce the cardinality table")
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--max-bits", type=int, help="mark cells wider than this as overflow")
    p.add_argument("--enumerate-limit", type=int, default=0, help="also enumerate cells up to this size")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("expand", help="search extension strings or verify an expanded set")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--anchor")
    p.add_argument("--first-row")
    p.add_argument("--limit", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--search", action="store_true", help="list usable x strings (default)")
    g.add_argument("--x", help="verify L plus the Z matrix built from this x")
    g.add_argument("--sweep", action="store_true", help="count usable x strings for every anchor of length n")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("rows", help="all strings non-overlapping with the first row")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--anchor")
    p.add_argument("--first-row")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_rows)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
