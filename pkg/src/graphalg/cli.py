"""Command line entry point.

Subcommands:
  analyze <file>                classify a graph document
  lattice <file> [--dot]       saturated hereditary sets and admissible pairs
  generate --family F --param N [-o FILE]   emit a finite family truncation
  symbolic --family F --param P             classify a family symbolically
  check [path]                 run the self-check suite over a graph file,
                               a directory of .g files, or the built-in corpus

Exit codes: 0 success, 1 usage error, 2 parse error, 3 size cap exceeded,
4 self-check violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .classify import classify
from .corpus import builtin_corpus, run_checks
from .families import (
    Family,
    FamilyDescriptor,
    UnsupportedFamilyError,
    format_param,
    generate_finite,
    maximal_ideal_cardinality,
    parse_param,
    symbolic_classify,
)
from .formats import (
    ParseError,
    parse_graph,
    render_lattice,
    render_lattice_dot,
    render_report,
    serialize_graph,
)
from .graph import CapExceededError


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")

    analyze = sub.add_parser("analyze", help="classify a graph document")
    analyze.add_argument("path")

    lattice = sub.add_parser("lattice", help="ideal lattice of a graph document")
    lattice.add_argument("path")
    lattice.add_argument("--dot", action="store_true", help="emit DOT instead of text")
    lattice.add_argument("--max-vertices", type=int, default=20)

    generate = sub.add_parser("generate", help="emit a finite family truncation")
    generate.add_argument("--family", required=True)
    generate.add_argument("--param", required=True)
    generate.add_argument("-o", "--output")
    generate.add_argument("--max-vertices", type=int, default=20)

    symbolic = sub.add_parser("symbolic", help="classify a family symbolically")
    symbolic.add_argument("--family", required=True)
    symbolic.add_argument("--param", required=True)

    check = sub.add_parser("check", help="run the self-check suite")
    check.add_argument("path", nargs="?")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--random-count", type=int, default=500)
    check.add_argument("--max-family-n", type=int, default=3)

    return parser


def _family(token: str) -> Family:
    for member in Family:
        if member.value == token:
            return member
    raise UsageError(
        f"unknown family {token!r}; expected one of "
        + ", ".join(m.value for m in Family)
    )


def _descriptor(family_token: str, param_token: str) -> FamilyDescriptor:
    kind = _family(family_token)
    try:
        return FamilyDescriptor(kind, parse_param(kind, param_token))
    except UnsupportedFamilyError as exc:
        raise UsageError(str(exc)) from None


def _load_graph(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_graph(text)


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    report = classify(g)
    sys.stdout.write(render_report(report, [("graph", args.path)]))
    return 0


def _cmd_lattice(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    if args.dot:
        sys.stdout.write(render_lattice_dot(g, args.max_vertices))
    else:
        sys.stdout.write(render_lattice(g, args.max_vertices))
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    kind = _family(args.family)
    if not args.param.isdigit():
        raise UsageError("generate needs a finite integer --param")
    try:
        desc = FamilyDescriptor(kind, int(args.param))
        g = generate_finite(desc, args.max_vertices)
    except UnsupportedFamilyError as exc:
        raise UsageError(str(exc)) from None
    text = serialize_graph(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_symbolic(args: argparse.Namespace) -> int:
    desc = _descriptor(args.family, args.param)
    report = symbolic_classify(desc)
    subject = [("family", desc.kind.value), ("param", format_param(desc.param))]
    extra = []
    try:
        count = maximal_ideal_cardinality(desc)
    except UnsupportedFamilyError:
        pass
    else:
        extra.append(("maximal_ideal_cardinality", format_param(count)))
    sys.stdout.write(render_report(report, subject, extra))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if args.path is None:
        entries = builtin_corpus(
            seed=args.seed,
            random_count=args.random_count,
            max_family_n=args.max_family_n,
        )
    else:
        target = Path(args.path)
        if target.is_dir():
            files = sorted(target.glob("*.g"))
            if not files:
                raise UsageError(f"no .g files under {target}")
            entries = [(str(f), parse_graph(f.read_text())) for f in files]
        else:
            entries = [(str(target), _load_graph(str(target)))]
    violations = run_checks(entries)
    for violation in violations:
        print(violation)
    print(f"checked {len(entries)} graphs: {len(violations)} violations")
    return 4 if violations else 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "lattice": _cmd_lattice,
    "generate": _cmd_generate,
    "symbolic": _cmd_symbolic,
    "check": _cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("missing command (analyze, lattice, generate, symbolic, check)")
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
