"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .algebraic import DomainError, reciprocal_scale, same_number
from .cf import expand, verify_identities
from .export import (
    EXPAND_COLUMNS,
    LADDER_COLUMNS,
    OFFSET_COLUMNS,
    STATS_COLUMNS,
    expansion_rows,
    ladder_rows,
    ladder_svg,
    offset_rows,
    render,
    stats_rows,
    to_csv,
)
from .ladder import build_ladder, verify_ladder
from .numspec import ParseError, format_number_spec, parse_number_spec
from .stats import kuzmin_report

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4

INDEX_RANGE = "n,k in 1..terms (b_0..b_terms expanded for both numbers)"


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _meta(command: str, **fields) -> dict:
    return {"tool": f"cfladder {__version__}", "command": command, **fields}


def cmd_expand(args) -> int:
    x = parse_number_spec(args.number)
    exp = expand(x, args.terms)
    meta = _meta("expand", number=args.number, canonical=format_number_spec(x),
                 terms=len(exp.quotients), terminated=str(exp.terminated).lower())
    _emit(render(args.out, meta, EXPAND_COLUMNS, expansion_rows(exp)), args.output)
    if args.verify:
        report = verify_identities(exp)
        if not report.ok:
            print(f"identity check failed at n = {list(report.failures)}", file=sys.stderr)
            return EXIT_VERIFY
        print(f"identities verified for {len(exp.quotients)} terms", file=sys.stderr)
    return EXIT_OK


def cmd_ladder(args) -> int:
    xi = parse_number_spec(args.xi)
    eta = reciprocal_scale(xi, args.m)
    eta_text = format_number_spec(eta)
    if args.eta is not None:
        given = parse_number_spec(args.eta)
        if not same_number(given, eta):
            raise DomainError(f"--eta {args.eta} is not {args.m}/xi")
        eta_text = args.eta
    exp_xi = expand(xi, args.terms + 1)
    exp_eta = expand(eta, args.terms + 1)
    ladder = build_ladder(exp_xi, exp_eta, args.m)

    meta = _meta("ladder", xi=args.xi, eta=eta_text, m=args.m, terms=args.terms,
                 index_range=INDEX_RANGE, connections=len(ladder.connections))
    _emit(render(args.out, meta, LADDER_COLUMNS, ladder_rows(ladder)), args.output)
    if args.figure3:
        Path(args.figure3).write_text(to_csv(meta, OFFSET_COLUMNS, offset_rows(ladder)))
    if args.svg:
        Path(args.svg).write_text(ladder_svg(ladder, args.xi, eta_text))
    print(f"{len(ladder.connections)} connections", file=sys.stderr)

    if args.verify:
        failed = []
        for name, exp in (("xi", exp_xi), ("eta", exp_eta)):
            rep = verify_identities(exp)
            if not rep.ok:
                failed.append(f"{name} identities at n = {list(rep.failures)}")
        failed += verify_ladder(ladder).violations
        if failed:
            for line in failed:
                print(f"violation: {line}", file=sys.stderr)
            return EXIT_VERIFY
        print("ladder verified: no violations", file=sys.stderr)
    return EXIT_OK


def cmd_stats(args) -> int:
    x = parse_number_spec(args.number)
    exp = expand(x, args.terms)
    report = kuzmin_report(exp, skip_first=args.skip_first)
    n, b = report.largest_quotient
    meta = _meta("stats", number=args.number, terms=len(exp.quotients),
                 skip_first=args.skip_first, sample_size=report.sample_size,
                 max_abs_deviation=f"{report.max_abs_deviation:.10f}",
                 largest_quotient=f"b_{n}={b}")
    _emit(render(args.out, meta, STATS_COLUMNS, stats_rows(report)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfladder",
        description="Continued fractions of algebraic numbers and ladders of (xi, m/xi).")
    parser.add_argument("--version", action="version", version=f"cfladder {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--terms", type=int, required=True)
        p.add_argument("--out", choices=("csv", "json"), default="csv", help="output format")
        p.add_argument("--output", "-o", metavar="PATH", help="write to file instead of stdout")

    p = sub.add_parser("expand", help="partial quotients and convergents")
    p.add_argument("--number", required=True, metavar="SPEC")
    common(p)
    p.add_argument("--verify", action="store_true", help="check the convergent identities")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("ladder", help="connections between xi and m/xi")
    p.add_argument("--xi", required=True, metavar="SPEC")
    p.add_argument("--eta", metavar="SPEC", help="explicit m/xi, cross-checked")
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--figure3", metavar="PATH", help="write the n-k series as CSV")
    p.add_argument("--svg", metavar="PATH", help="write the ladder diagram")
    p.set_defaults(func=cmd_ladder)

    p = sub.add_parser("stats", help="partial quotient frequencies vs the Kuzmin law")
    p.add_argument("--number", required=True, metavar="SPEC")
    common(p)
    p.add_argument("--skip-first", type=int, default=1)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.terms < 1:
        print("error: --terms must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ValueError) as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
