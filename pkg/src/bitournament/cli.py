"""Command-line interface.

Sequences are comma-separated integers; a pair is two sequences separated
by ``|``, e.g. ``"1,1,2,2,3,4 | 1,2,3,5,6"``. Whitespace is ignored.

Exit codes: 0 accept/success, 1 reject/not realizable, 2 input or budget
error, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .characterize import CheckReport, avery_check, feasible, landau_check, moon_check, trim_check
from .errors import BudgetExceeded, Discrepancy, NotRealizable, TrimFailed
from .oracle import census_csv, cross_validate, enumerate_bitournaments
from .realize import realize, to_dot
from .seqcore import MAX_ELEMENT, BoundedSeq, conjugate, trim_by_sequence

EXIT_OK, EXIT_REJECT, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class InputSpec:
    a: tuple[int, ...]
    b: tuple[int, ...]
    a_bound: Optional[int] = None
    b_bound: Optional[int] = None

    @property
    def bounds(self) -> tuple[int, int]:
        return (
            len(self.b) if self.a_bound is None else self.a_bound,
            len(self.a) if self.b_bound is None else self.b_bound,
        )


def parse_sequence(text: str, side: str = "sequence") -> tuple[int, ...]:
    body = "".join(text.split())
    if not body:
        return ()
    out = []
    for pos, token in enumerate(body.split(","), start=1):
        if token == "":
            raise InputError(f"{side}, position {pos}: empty element")
        try:
            value = int(token, 10)
        except ValueError:
            raise InputError(f"{side}, position {pos}: {token!r} is not an integer") from None
        if value < 0:
            raise InputError(f"{side}, position {pos}: {value} is negative")
        if value > MAX_ELEMENT:
            raise InputError(f"{side}, position {pos}: {value} exceeds the 64-bit range")
        out.append(value)
    return tuple(out)


def parse_pair(text: str) -> InputSpec:
    sides = text.split("|")
    if len(sides) != 2:
        raise InputError(f"expected two sequences separated by '|', got {len(sides)} part(s)")
    return InputSpec(parse_sequence(sides[0], "A"), parse_sequence(sides[1], "B"))


def fmt_seq(s: Sequence[int]) -> str:
    return ",".join(map(str, s))


def _angle(s: Sequence[int]) -> str:
    return "<" + fmt_seq(s) + ">"


def render_trim_trace(report: CheckReport, name: str = "Bbar") -> list[str]:
    """One line per sequence, labelled with the schedule applied so far.

    Positions that reach zero stay in place, so every row has the same length.
    """
    trace = report.trace
    if trace is None:
        return []
    seqs = trace.sequences()
    lines = [f"{name} = {_angle(seqs[0])}"]
    for k in range(1, len(seqs)):
        lines.append(f"{name}_{_angle(trace.schedule[:k])} = {_angle(seqs[k])}")
    return lines


def render_moon_table(report: CheckReport) -> list[str]:
    lines = ["k\tl\tsum\tkl"]
    for row in report.table or ():
        lines.append(f"{row.k}\t{row.l}\t{row.total}\t{row.product}")
    return lines


def _emit(args, payload: dict, text_lines: list[str]):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_check(args) -> int:
    spec = parse_pair(args.pair)
    runners = {"moon": moon_check, "trim": trim_check}
    names = ["trim", "moon"] if args.criterion == "both" else [args.criterion]
    reports = [runners[name](spec.a, spec.b) for name in names]
    lines = []
    for rep in reports:
        lines.append(rep.describe())
        if args.trace:
            lines += render_trim_trace(rep) if rep.criterion == "trimming" else render_moon_table(rep)
    verdicts = {rep.verdict for rep in reports}
    payload = {"reports": [rep.to_dict() for rep in reports]}
    if len(verdicts) > 1:
        payload["verdict"] = "disagreement"
        _emit(args, payload, lines + ["internal error: criteria disagree"])
        return EXIT_INTERNAL
    payload["verdict"] = reports[0].verdict
    _emit(args, payload, lines)
    return EXIT_OK if reports[0].accepted else EXIT_REJECT


def cmd_realize(args) -> int:
    spec = parse_pair(args.pair)
    report = trim_check(spec.a, spec.b)
    if not report.accepted:
        _emit(args, {"verdict": "reject", "report": report.to_dict()}, [report.describe()])
        return EXIT_REJECT
    a_bound, b_bound = spec.bounds
    try:
        t, _ = realize(feasible(BoundedSeq(spec.a, a_bound), BoundedSeq(spec.b, b_bound)))
    except NotRealizable as exc:
        # trim_check already accepted; the realizer disagreeing is a bug
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    rows = ["".join("1" if v else "0" for v in row) for row in t.arcs]
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(t))
    _emit(args, {"verdict": "accept", "matrix": [[int(v) for v in row] for row in t.arcs]}, rows)
    return EXIT_OK


def _parse_schedule(text: str) -> tuple[int, ...]:
    return parse_sequence(text, "schedule")


def cmd_trim(args) -> int:
    elems = parse_sequence(args.sequence)
    schedule = _parse_schedule(args.schedule)
    bound = args.bound if args.bound is not None else max(elems, default=0)
    s = BoundedSeq(elems, bound)
    try:
        final, trace = trim_by_sequence(s, schedule)
    except TrimFailed as exc:
        lines = [f"trim failed at step {exc.step}: {exc.cause}"]
        payload = {"ok": False, "step": exc.step, "requested": exc.cause.requested,
                   "available": exc.cause.available}
        _emit(args, payload, lines)
        return EXIT_REJECT
    lines = [fmt_seq(final)]
    if args.trace:
        lines = [f"A = {_angle(trace.start)}"] + [
            f"A_{_angle(schedule[:k])} = {_angle(seq)}"
            for k, seq in enumerate(trace.sequences()[1:], start=1)
        ]
    _emit(args, {"ok": True, "result": list(final),
                 "trace": [list(q) for q in trace.sequences()]}, lines)
    return EXIT_OK


def cmd_conjugate(args) -> int:
    s = BoundedSeq(parse_sequence(args.sequence), args.bound)
    result = conjugate(s)
    _emit(args, {"result": list(result), "bound": result.bound}, [fmt_seq(result)])
    return EXIT_OK


def _single(check, args) -> int:
    rep = check(parse_sequence(args.sequence))
    _emit(args, rep.to_dict(), [rep.describe()])
    return EXIT_OK if rep.accepted else EXIT_REJECT


def cmd_census(args) -> int:
    entries = enumerate_bitournaments(args.m, args.n, workers=args.workers)
    if args.format == "json":
        print(json.dumps([e._asdict() for e in entries], sort_keys=True))
    else:
        sys.stdout.write(census_csv(entries))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        result = cross_validate(args.m, args.n, workers=args.workers)
    except Discrepancy as exc:
        for label, pair in exc.witnesses:
            print(f"DISCREPANCY {label}: {_angle(pair[0])} | {_angle(pair[1])}")
        return EXIT_INTERNAL
    _emit(args, {"ok": True, "m": result.m, "n": result.n,
                 "realizable": len(result.realizable), "candidates": result.candidates},
          [result.summary(), "oracle = moon = trimming"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitournament",
        description="Score sequences of bitournaments: check, realize, trim, enumerate.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide whether A | B is a score pair")
    p.add_argument("pair")
    p.add_argument("--criterion", choices=("moon", "trim", "both"), default="both")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", parents=[common], help="construct a bitournament for A | B")
    p.add_argument("pair")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("trim", parents=[common], help="apply a normal trimming schedule")
    p.add_argument("sequence")
    p.add_argument("--schedule", required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_trim)

    p = sub.add_parser("conjugate", parents=[common], help="elementwise bound - e")
    p.add_argument("sequence")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_conjugate)

    for name, check in (("landau", landau_check), ("avery", avery_check)):
        p = sub.add_parser(name, parents=[common], help=f"{name} score sequence test")
        p.add_argument("sequence")
        p.set_defaults(func=lambda args, check=check: _single(check, args))

    for name, func in (("census", cmd_census), ("verify", cmd_verify)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.add_argument("--workers", type=int, default=None)
        p.set_defaults(func=func)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
