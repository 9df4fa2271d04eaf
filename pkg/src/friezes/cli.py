"""Command line front end.

Subcommands:
  gen        radical frieze of a p-angulation
  cc         integer frieze of a triangulation
  tree       noncrossing tree of a 4-angulation
  associate  associated triangulation of a 4- or 6-angulation
  enumerate  stream (or count) all p-angulations with a given face count
  verify     run the coincidence checks over a whole sweep
  validate   check a frieze grid against the frieze laws

Exit codes: 0 success, 1 input or validation error, 2 a verification sweep
found a counterexample, 3 an internal assertion failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bijection import Triangulation, associated_triangulation, quad_to_tree
from .frieze import (
    Frieze,
    InternalAssertionError,
    cc_frieze,
    lambda_frieze,
    render_ascii,
    render_csv,
    validate,
)
from .polygon import Dissection, enumerate_p_angulations
from .verify import sweep


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep argparse from sys.exit(2)
        raise UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _read_payload(source: str) -> dict:
    """Load JSON from a path, from '-' (stdin), or from an inline literal."""
    if source == "-":
        return json.load(sys.stdin)
    if source.lstrip().startswith("{"):
        return json.loads(source)
    with open(source, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit_frieze(frieze: Frieze, fmt: str) -> None:
    if fmt == "ascii":
        print(render_ascii(frieze))
    elif fmt == "json":
        print(json.dumps(frieze.to_json()))
    else:
        print(render_csv(frieze))


def _cmd_gen(args: argparse.Namespace) -> int:
    dissection = Dissection.from_json(_read_payload(args.input))
    _emit_frieze(lambda_frieze(dissection, args.p), args.format)
    return 0


def _cmd_cc(args: argparse.Namespace) -> int:
    triangulation = Triangulation.from_json(_read_payload(args.input))
    _emit_frieze(cc_frieze(triangulation), args.format)
    return 0


def _cmd_tree(args: argparse.Namespace) -> int:
    dissection = Dissection.from_json(_read_payload(args.input))
    print(json.dumps(quad_to_tree(dissection).to_json()))
    return 0


def _cmd_associate(args: argparse.Namespace) -> int:
    dissection = Dissection.from_json(_read_payload(args.input))
    print(json.dumps(associated_triangulation(dissection, args.p).to_json()))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    found = sorted(
        enumerate_p_angulations(args.s, args.p), key=lambda d: d.diagonals_sorted
    )
    if args.count_only:
        print(len(found))
    else:
        for dissection in found:
            print(json.dumps(dissection.to_json()))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    summary = sweep(args.p, args.max_s, deep=args.deep_uniqueness)
    print(json.dumps(summary.to_json()))
    return 0 if summary.all_ok else 2


def _cmd_validate(args: argparse.Namespace) -> int:
    report = validate(Frieze.from_json(_read_payload(args.input)))
    print(json.dumps(report.to_json()))
    return 0 if report.ok else 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="friezes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> _Parser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    gen = add("gen", _cmd_gen, "radical frieze of a p-angulation")
    gen.add_argument("--p", type=int, choices=(4, 6), required=True)
    gen.add_argument("--input", required=True, help="path, '-' for stdin, or inline JSON")
    gen.add_argument("--format", choices=("ascii", "json", "csv"), default="ascii")

    cc = add("cc", _cmd_cc, "integer frieze of a triangulation")
    cc.add_argument("--input", required=True, help="path, '-' for stdin, or inline JSON")
    cc.add_argument("--format", choices=("ascii", "json", "csv"), default="ascii")

    tree = add("tree", _cmd_tree, "noncrossing tree of a 4-angulation")
    tree.add_argument("--input", required=True, help="path, '-' for stdin, or inline JSON")

    associate = add("associate", _cmd_associate, "associated triangulation")
    associate.add_argument("--p", type=int, choices=(4, 6), required=True)
    associate.add_argument(
        "--input", required=True, help="path, '-' for stdin, or inline JSON"
    )

    enum = add("enumerate", _cmd_enumerate, "list all p-angulations with s faces")
    enum.add_argument("--p", type=int, choices=(4, 6), required=True)
    enum.add_argument("--s", type=_positive, required=True, help="face count")
    enum.add_argument("--count-only", action="store_true")

    verify = add("verify", _cmd_verify, "sweep the coincidence checks")
    verify.add_argument("--p", type=int, choices=(4, 6), required=True)
    verify.add_argument("--max-s", type=_positive, required=True, help="face count bound")
    verify.add_argument(
        "--deep-uniqueness",
        action="store_true",
        help="also scan every triangulation of each polygon for odd-row matches",
    )

    val = add("validate", _cmd_validate, "check a frieze grid")
    val.add_argument("--input", required=True, help="path, '-' for stdin, or inline JSON")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:  # covers JSON and all domain errors
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalAssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
