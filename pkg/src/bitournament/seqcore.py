"""Bounded integer sequences, conjugation and trimming.

An ``(m, n)``-sequence is ``m`` integers in ``[0, n]``; :class:`BoundedSeq`
keeps the bound ``n`` next to the elements. Trimming subtracts 1 from some
positive elements; the *normal* variant always hits the largest ones, with
ties resolved toward the smallest index so traces are reproducible.

All values are immutable and every operation returns a new object.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import NotEnoughPositives, PositionNotPositive, SequenceError, TrimFailed

# elements and bounds must fit a signed 64-bit machine word
MAX_ELEMENT = 2**63 - 1

IntSeq = tuple[int, ...]
TrimSchedule = Sequence[int]


def _check_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SequenceError(f"{what}: {value!r} is not an integer")
    if value < 0:
        raise SequenceError(f"{what}: {value} is negative")
    if value > MAX_ELEMENT:
        raise SequenceError(f"{what}: {value} exceeds the 64-bit range")
    return int(value)


def int_seq(values: Iterable[int]) -> IntSeq:
    """Validate ``values`` as nonnegative 64-bit integers and return a tuple."""
    return tuple(_check_int(v, f"element {i}") for i, v in enumerate(values))


@dataclass(frozen=True)
class BoundedSeq:
    """An ``(m, bound)``-sequence: ``m`` integers, each in ``[0, bound]``."""

    elems: IntSeq
    bound: int

    def __post_init__(self):
        elems = int_seq(self.elems)
        bound = _check_int(self.bound, "bound")
        for i, e in enumerate(elems):
            if e > bound:
                raise SequenceError(f"element {i}: {e} exceeds bound {bound}")
        object.__setattr__(self, "elems", elems)
        object.__setattr__(self, "bound", bound)

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    def __str__(self):
        return "<" + ",".join(map(str, self.elems)) + ">"

    @property
    def total(self) -> int:
        return sum(self.elems)

    def is_zero(self) -> bool:
        return not any(self.elems)


class TrimStep(NamedTuple):
    amount: int
    result: BoundedSeq


@dataclass(frozen=True)
class TrimTrace:
    """The starting sequence and each ``(amount, result)`` of a trimming schedule."""

    start: BoundedSeq
    steps: tuple[TrimStep, ...] = ()

    def __post_init__(self):
        prev = self.start
        for step in self.steps:
            if prev.total - step.result.total != step.amount:
                raise SequenceError("trace step does not remove exactly its amount")
            prev = step.result

    def __len__(self):
        return len(self.steps)

    @property
    def final(self) -> BoundedSeq:
        return self.steps[-1].result if self.steps else self.start

    @property
    def schedule(self) -> IntSeq:
        return tuple(step.amount for step in self.steps)

    def sequences(self) -> list[IntSeq]:
        """Every intermediate sequence, starting sequence first."""
        return [self.start.elems] + [step.result.elems for step in self.steps]


def positive_count(s: Iterable[int]) -> int:
    return sum(1 for e in s if e > 0)


def conjugate(s: BoundedSeq) -> BoundedSeq:
    return BoundedSeq(tuple(s.bound - e for e in s.elems), s.bound)


def trim(s: BoundedSeq, positions: Iterable[int]) -> BoundedSeq:
    """General c-trimming: subtract 1 at each index in ``positions``."""
    chosen = set(positions)
    for i in chosen:
        if not 0 <= i < len(s) or s.elems[i] <= 0:
            raise PositionNotPositive(i)
    return BoundedSeq(
        tuple(e - 1 if i in chosen else e for i, e in enumerate(s.elems)), s.bound
    )


def normal_trim_positions(s: Sequence[int], c: int) -> list[int]:
    """Indices a normal ``c``-trimming decrements, in selection order.

    Largest values first; equal values are taken smallest index first.
    """
    c = _check_int(c, "trim amount")
    available = positive_count(s)
    if c > available:
        raise NotEnoughPositives(c, available)
    order = sorted((i for i, e in enumerate(s) if e > 0), key=lambda i: (-s[i], i))
    return order[:c]


def normal_trim(s: BoundedSeq, c: int) -> BoundedSeq:
    return trim(s, normal_trim_positions(s.elems, c))


def trim_by_sequence(s: BoundedSeq, schedule: TrimSchedule) -> tuple[BoundedSeq, TrimTrace]:
    """Apply normal trimmings ``schedule[0]``, ``schedule[1]``, ... in order.

    Raises :class:`TrimFailed` carrying the 1-based failing step and the
    partial trace when some step has too few positive elements.
    """
    steps = []
    current = s
    for k, c in enumerate(schedule, start=1):
        try:
            current = normal_trim(current, c)
        except NotEnoughPositives as exc:
            raise TrimFailed(k, exc, TrimTrace(s, tuple(steps))) from exc
        steps.append(TrimStep(c, current))
    return current, TrimTrace(s, tuple(steps))


def replicate_scale(s: BoundedSeq, c: int) -> BoundedSeq:
    """``c`` consecutive copies of ``s`` with every element multiplied by ``c``."""
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise SequenceError(f"replication factor must be a positive integer, got {c!r}")
    scaled = tuple(c * e for e in s.elems)
    return BoundedSeq(scaled * c, c * s.bound)
