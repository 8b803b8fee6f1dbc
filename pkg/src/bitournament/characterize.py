"""Decision procedures for score sequences.

Four criteria live here:

* :func:`moon_check` -- prefix-sum inequalities over every ``(k, l)``.
* :func:`trim_check` -- feasibility plus "conjugate of B, trimmed by A,
  reaches zero".
* :func:`landau_check` -- tournaments.
* :func:`avery_check` -- digraphs, with score ``n - 1 + outdeg - indeg``.

Every check returns a :class:`CheckReport`; rejection is a value, not an
exception, and always carries a :class:`Witness`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from math import comb
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import BoundMismatch, NotFeasible, SumMismatch, TrimFailed
from .seqcore import BoundedSeq, TrimTrace, conjugate, int_seq, trim_by_sequence

ACCEPT = "accept"
REJECT = "reject"


@dataclass(frozen=True)
class FeasiblePair:
    """``a`` is an ``(m, n)``-sequence, ``b`` an ``(n, m)``-sequence, sums total ``m*n``."""

    a: BoundedSeq
    b: BoundedSeq

    def __post_init__(self):
        m, n = len(self.a), len(self.b)
        if self.a.bound != n or self.b.bound != m:
            raise BoundMismatch(
                f"bounds ({self.a.bound},{self.b.bound}) do not match lengths ({n},{m})"
            )
        total = self.a.total + self.b.total
        if total != m * n:
            raise SumMismatch(total, m * n)

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.b)


@dataclass(frozen=True)
class Witness:
    """Why a check rejected.

    ``kind`` is one of ``moon`` (``where=(k, l)``, ``lhs`` prefix sum, ``rhs``
    product), ``trim`` (``where=(i,)`` 1-based x-index, ``lhs`` requested,
    ``rhs`` positive count available), ``prefix`` (Landau/Avery, ``where=(k,)``),
    ``bound`` (``where=(side, index)`` with side 0 for A and 1 for B) or
    ``sum`` (``lhs`` actual total, ``rhs`` required total).
    """

    kind: str
    where: tuple[int, ...]
    lhs: int
    rhs: int

    def describe(self) -> str:
        if self.kind == "moon":
            k, l = self.where
            rel = "<" if self.lhs < self.rhs else "!="
            return f"(k,l)=({k},{l}): {self.lhs} {rel} {self.rhs}"
        if self.kind == "trim":
            return f"step {self.where[0]}: NotEnoughPositives({self.lhs},{self.rhs})"
        if self.kind == "prefix":
            rel = "<" if self.lhs < self.rhs else "!="
            return f"k={self.where[0]}: {self.lhs} {rel} {self.rhs}"
        if self.kind == "bound":
            side, i = self.where
            return f"{'AB'[side]}[{i + 1}]={self.lhs} exceeds bound {self.rhs}"
        return f"element sum {self.lhs} != {self.rhs}"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "where": list(self.where), "lhs": self.lhs, "rhs": self.rhs}


class MoonRow(NamedTuple):
    k: int
    l: int
    total: int
    product: int


@dataclass(frozen=True)
class CheckReport:
    verdict: str
    criterion: str
    witness: Optional[Witness] = None
    trace: Optional[TrimTrace] = None
    table: Optional[tuple[MoonRow, ...]] = None

    def __post_init__(self):
        if self.verdict == REJECT and self.witness is None:
            raise ValueError("a rejecting report needs a witness")
        if self.verdict == ACCEPT and self.criterion == "trimming" and self.trace is not None:
            if not self.trace.final.is_zero():
                raise ValueError("accepting trimming trace must end at zero")

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPT

    def describe(self) -> str:
        if self.accepted:
            return f"{self.criterion}: accept"
        return f"{self.criterion}: reject at {self.witness.describe()}"

    def to_dict(self) -> dict:
        out = {
            "verdict": self.verdict,
            "criterion": self.criterion,
            "witness": self.witness.to_dict() if self.witness else None,
        }
        if self.trace is not None:
            out["schedule"] = list(self.trace.schedule)
            out["trace"] = [list(s) for s in self.trace.sequences()]
        if self.table is not None:
            out["table"] = [row._asdict() for row in self.table]
        return out


def _elements(s) -> tuple[int, ...]:
    return s.elems if isinstance(s, BoundedSeq) else int_seq(s)


def _validate_pair(criterion: str, a, b) -> Optional[CheckReport]:
    """Reject elements above the partner length before any criterion runs."""
    m, n = len(a), len(b)
    for side, (seq, bound) in enumerate(((a, n), (b, m))):
        for i, e in enumerate(seq):
            if e > bound:
                return CheckReport(REJECT, criterion, Witness("bound", (side, i), e, bound))
    return None


def feasible(a: BoundedSeq, b: BoundedSeq) -> FeasiblePair:
    """Validate ``(a, b)`` as an ``(m, n)``-feasible pair.

    Raises BoundMismatch or SumMismatch(actual, m*n).
    """
    return FeasiblePair(a, b)


def moon_table(a: Iterable[int], b: Iterable[int]) -> tuple[MoonRow, ...]:
    """All ``(k, l, prefix_a[k] + prefix_b[l], k*l)`` rows on the sorted inputs."""
    pa = list(accumulate(sorted(_elements(a))))
    pb = list(accumulate(sorted(_elements(b))))
    return tuple(
        MoonRow(k, l, sa + sb, k * l)
        for k, sa in enumerate(pa, start=1)
        for l, sb in enumerate(pb, start=1)
    )


def moon_check(a: Iterable[int], b: Iterable[int]) -> CheckReport:
    a, b = _elements(a), _elements(b)
    m, n = len(a), len(b)
    bad = _validate_pair("moon", a, b)
    if bad is not None:
        return bad
    if m == 0 or n == 0:
        # no (k, l) exists; only 0 == m*n remains, and the bound check forced zeros
        return CheckReport(ACCEPT, "moon", table=())
    table = moon_table(a, b)
    for row in table:
        if row.total < row.product or (row.k == m and row.l == n and row.total != row.product):
            return CheckReport(
                REJECT, "moon", Witness("moon", (row.k, row.l), row.total, row.product), table=table
            )
    return CheckReport(ACCEPT, "moon", table=table)


def trim_check(a: Iterable[int], b: Iterable[int]) -> CheckReport:
    """Accept iff ``(a, b)`` is feasible and conj(b) trimmed by ``a`` exists.

    Inputs need not be sorted. The trace runs over conj(b) with bound ``m``;
    existence of the trimming forces the zero result because the sums agree.
    """
    a, b = _elements(a), _elements(b)
    m, n = len(a), len(b)
    bad = _validate_pair("trimming", a, b)
    if bad is not None:
        return bad
    try:
        pair = feasible(BoundedSeq(a, n), BoundedSeq(b, m))
    except SumMismatch as exc:
        return CheckReport(REJECT, "trimming", Witness("sum", (), exc.actual, exc.expected))
    start = conjugate(pair.b)
    try:
        _, trace = trim_by_sequence(start, pair.a)
    except TrimFailed as exc:
        witness = Witness("trim", (exc.step,), exc.cause.requested, exc.cause.available)
        return CheckReport(REJECT, "trimming", witness, trace=exc.trace)
    return CheckReport(ACCEPT, "trimming", trace=trace)


def _prefix_check(criterion: str, s: Iterable[int], required) -> CheckReport:
    s = sorted(int_seq(s))
    n = len(s)
    for k, total in enumerate(accumulate(s), start=1):
        need = required(k)
        if total < need or (k == n and total != need):
            return CheckReport(REJECT, criterion, Witness("prefix", (k,), total, need))
    return CheckReport(ACCEPT, criterion)


def landau_check(s: Iterable[int]) -> CheckReport:
    """Tournament score sequence test: prefix sums >= C(k, 2), equal at ``k = n``."""
    return _prefix_check("landau", s, lambda k: comb(k, 2))


def avery_check(s: Iterable[int]) -> CheckReport:
    """Digraph score test: prefix sums >= 2*C(k, 2), equal at ``k = n``."""
    return _prefix_check("avery", s, lambda k: 2 * comb(k, 2))


def _trims_to_zero(start: BoundedSeq, schedule: Sequence[int]) -> bool:
    try:
        final, _ = trim_by_sequence(start, schedule)
    except TrimFailed:
        return False
    return final.is_zero()


def corollary_symmetry(a: BoundedSeq, b: BoundedSeq) -> tuple[bool, bool]:
    """Return ``(conj(a) trimmed by b is zero, conj(b) trimmed by a is zero)``."""
    try:
        pair = feasible(a, b)
    except (BoundMismatch, SumMismatch) as exc:
        raise NotFeasible(str(exc)) from exc
    return (
        _trims_to_zero(conjugate(pair.a), pair.b.elems),
        _trims_to_zero(conjugate(pair.b), pair.a.elems),
    )
