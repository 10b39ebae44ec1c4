"""Command-line front end.

Exit codes: 0 success, 1 usage error (including an unwritable output file),
2 enumeration guard exceeded, 3 methods disagree / identity violated.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .derangements import DEFAULT_GUARD, GuardExceeded, MultisetSpec
from .laguerre import laguerre, laguerre_explicit
from .linearization import linearization_coefficient, verify_range
from .tables import (
    FORMATS,
    METHODS,
    IdentityViolation,
    TableCache,
    TableRequest,
    build_table,
    compute_value,
    render,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_VIOLATION = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--guard", type=_nonnegative, default=DEFAULT_GUARD,
                        help=f"largest N the enumeration oracle may run on (default {DEFAULT_GUARD})")
    common.add_argument("--cache", metavar="PATH",
                        help="JSON cache file to read and update (default: no persistence)")

    parser = _Parser(prog="evengillis", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("derange", parents=[common], help="count multiset derangements")
    p.add_argument("spec", nargs="*", type=_nonnegative, metavar="n")
    p.add_argument("--method", choices=METHODS, default="ie")

    p = sub.add_parser("linearize", parents=[common], help="print the linearization coefficient E")
    p.add_argument("spec", nargs="*", type=_nonnegative, metavar="n")

    p = sub.add_parser("laguerre", help="print the Laguerre polynomial L_n")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("--explicit", action="store_true", help="build from the closed sum")

    p = sub.add_parser("table", parents=[common], help="compile a table of D values")
    p.add_argument("max", nargs="+", type=_nonnegative,
                   help="inclusive maximum for each argument; the count gives k")
    p.add_argument("--k", type=_nonnegative,
                   help="repeat a single maximum k times")
    p.add_argument("--method", choices=METHODS, default="ie")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("-o", "--output", metavar="PATH", help="write to PATH instead of stdout")

    p = sub.add_parser("verify", parents=[common], help="check D = E over a box of specs")
    p.add_argument("max", nargs="+", type=_nonnegative)
    p.add_argument("--k", type=_nonnegative)
    p.add_argument("--oracle", action="store_true",
                   help="also compare with brute-force enumeration where N <= guard")
    return parser


def _maxes(args) -> tuple[int, ...]:
    if args.k is None:
        return tuple(args.max)
    if len(args.max) != 1:
        raise UsageError("--k takes a single maximum to repeat")
    if args.k == 0:
        raise UsageError("--k must be positive")
    return tuple(args.max) * args.k


def _load_cache(args) -> Optional[TableCache]:
    if not args.cache:
        return None
    try:
        return TableCache.load(args.cache)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read cache {args.cache}: {exc}")


def _save_cache(args, cache: Optional[TableCache]) -> None:
    if cache is None:
        return
    try:
        cache.save(args.cache)
    except OSError as exc:
        raise UsageError(f"cannot write cache {args.cache}: {exc}")


def _cmd_derange(args, out, err) -> int:
    spec = MultisetSpec(tuple(args.spec))
    cache = _load_cache(args)
    value, methods, note = compute_value(spec, args.method, args.guard, cache)
    _save_cache(args, cache)
    print(value, file=out)
    if len(methods) > 1:
        print(f"agreement: {', '.join(methods)} all give {value}", file=err)
    if note:
        print(f"note: {note}", file=err)
    return EXIT_OK


def _cmd_linearize(args, out, err) -> int:
    print(linearization_coefficient(MultisetSpec(tuple(args.spec))), file=out)
    return EXIT_OK


def _cmd_laguerre(args, out, err) -> int:
    poly = laguerre_explicit(args.n) if args.explicit else laguerre(args.n)
    print(poly, file=out)
    return EXIT_OK


def _cmd_table(args, out, err) -> int:
    try:
        request = TableRequest(_maxes(args), args.method, args.format)
    except ValueError as exc:
        raise UsageError(str(exc))
    cache = _load_cache(args)
    table = build_table(request, args.guard, cache)
    text = render(table)
    _save_cache(args, cache)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}")
    else:
        out.write(text)
    if request.format != "text":
        for cell in table.cells:
            if cell.note:
                print(f"note: {cell.spec}: {cell.note}", file=err)
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    maxes = _maxes(args)
    reports = verify_range(maxes, args.oracle, args.guard)
    failed = [r for r in reports if not r.holds]
    with_oracle = sum(r.d_enum is not None for r in reports)
    print(f"verify k={len(maxes)} max={list(maxes)}: {len(reports)} specs, "
          f"{len(reports) - len(failed)} pass, {len(failed)} fail", file=out)
    if args.oracle:
        print(f"brute-force oracle ran on {with_oracle} specs "
              f"(skipped {len(reports) - with_oracle} above guard {args.guard})", file=out)
    for r in failed:
        print(f"counterexample {r}", file=out)
    return EXIT_OK if not failed else EXIT_VIOLATION


_COMMANDS = {
    "derange": _cmd_derange,
    "linearize": _cmd_linearize,
    "laguerre": _cmd_laguerre,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_GUARD
    except IdentityViolation as exc:
        print(f"error: {exc}", file=err)
        return EXIT_VIOLATION
