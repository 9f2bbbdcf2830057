"""Command-line interface.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 a
verification suite found a violation, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Iterator, Sequence

from . import oracle
from .equivalence import comparator
from .games import default_store
from .nim import (
    enumerate_positions,
    from_nim_position,
    misere_best_moves,
    nim_closed_outcome,
    reduced_form,
)
from .notation import ParseError, format_position, parse_game, parse_position


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would print and exit on its own
        raise UsageError(message)


def _parse_bounds(text: str, arity: int) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad --bounds {text!r}") from None
    if len(values) != arity or any(v < 0 for v in values):
        raise UsageError(f"--bounds needs {arity} non-negative integer(s), got {text!r}")
    return values


def report_to_json(report: oracle.ClassReport) -> str:
    doc = {
        "context": report.context.value,
        "bounds": {"max_heaps": report.bounds[0], "max_size": report.bounds[1]},
        "classes": [
            {"representative": format_position(c[0]), "members": [format_position(p) for p in c]}
            for c in report.classes
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def report_to_csv(report: oracle.ClassReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["class", "representative", "member"])
    for i, c in enumerate(report.classes):
        for p in c:
            writer.writerow([i, format_position(c[0]), format_position(p)])
    return buf.getvalue()


def _cmd_outcome(args) -> list[str]:
    store = default_store()
    try:
        p = parse_position(args.position)
    except ParseError:
        g = parse_game(args.position, store)
        return [str(store.misere_outcome(g))]
    result = nim_closed_outcome(p)
    if args.check:
        tree = store.misere_outcome(from_nim_position(p, store))
        if tree is not result:
            print(f"rule gives {result}, tree search gives {tree}", file=sys.stderr)
            raise _VerificationFailed
    return [str(result)]


def _cmd_reduce(args) -> list[str]:
    return [format_position(reduced_form(parse_position(args.position)))]


def _cmd_equiv(args) -> list[str]:
    store = default_store()
    p, q = parse_position(args.first), parse_position(args.second)
    g, h = from_nim_position(p, store), from_nim_position(q, store)
    comp = comparator(store)
    if args.context == "impartial":
        same = comp.impartial_equiv(g, h)
    else:
        same = comp.partizan_eq(g, h)
    lines = ["equivalent" if same else "inequivalent"]
    if args.witness and not same:
        size = max(p + q, default=0)
        contexts = oracle.context_set(
            args.context, args.birthday, enumerate_positions(max(len(p), len(q)), size), store
        )
        x = oracle.refute_equiv(g, h, contexts, store=store)
        lines.append("witness: " + ("none found" if x is None else store.format_game(x)))
    return lines


def _cmd_ge(args) -> list[str]:
    store = default_store()
    g, h = parse_game(args.first, store), parse_game(args.second, store)
    return [str(comparator(store).partizan_ge(g, h)).lower()]


def _cmd_best_move(args) -> list[str]:
    moves = sorted(misere_best_moves(parse_position(args.position)), key=lambda q: (len(q), q))
    if not moves:
        return ["none (P-position)"]
    return [format_position(q) for q in moves]


def _cmd_classify(args) -> list[str]:
    if args.max_heaps < 0 or args.max_size < 0:
        raise UsageError("bounds must be non-negative")
    report = oracle.classify(args.max_heaps, args.max_size, args.context)
    text = report_to_json(report) if args.format == "json" else report_to_csv(report)
    return [text.rstrip("\n")]


class _VerificationFailed(Exception):
    pass


_SUITES: dict[str, tuple[tuple[int, ...], Callable[..., Iterator[str]]]] = {
    "adding1": ((15,), oracle.adding_one_violations),
    "partizan-singletons": ((3, 4), oracle.partizan_singleton_violations),
    "reduced-fibers": ((3, 5), oracle.reduced_fiber_violations),
    "lemmas": ((4, 6), oracle.order_lemma_violations),
}


def _cmd_verify(args) -> list[str]:
    defaults, check = _SUITES[args.suite]
    bounds = _parse_bounds(args.bounds, len(defaults)) if args.bounds else defaults
    violations = list(check(*bounds))
    if violations:
        for v in violations:
            print(v, file=sys.stderr)
        print(f"FAIL {args.suite} {','.join(map(str, bounds))}: {len(violations)} violation(s)")
        raise _VerificationFailed
    return [f"PASS {args.suite} {','.join(map(str, bounds))}"]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="misere-nim", description="Misère Nim equivalence classes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("outcome", help="misère outcome of a position or game")
    p.add_argument("position")
    p.add_argument("--check", action="store_true", help="cross-check against tree search")
    p.set_defaults(func=_cmd_outcome)

    p = sub.add_parser("reduce", help="reduced form of a position")
    p.add_argument("position")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("equiv", help="decide equivalence of two positions")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--context", choices=["impartial", "partizan"], default="impartial")
    p.add_argument("--witness", action="store_true", help="search for a distinguishing game")
    p.add_argument("--birthday", type=int, default=3, help="birthday bound for --witness")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("ge", help="decide G >= H for game expressions")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_ge)

    p = sub.add_parser("best-move", help="winning misère Nim moves")
    p.add_argument("position")
    p.set_defaults(func=_cmd_best_move)

    p = sub.add_parser("classify", help="equivalence classes of positions in range")
    p.add_argument("--max-heaps", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--context", choices=["impartial", "partizan"], default="impartial")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--bounds", help="N for adding1, K,S otherwise")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        lines = args.func(args)
    except (UsageError, ParseError, oracle.BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _VerificationFailed:
        return 1
    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
