"""Greedy construction of a bitournament from an accepted score pair.

Each x-vertex in input order sends arcs to the y-vertices with the largest
remaining in-degree demand (conj(B)), ties going to the smaller index. Every
pair left unconnected is then oriented from y to x.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .characterize import FeasiblePair, trim_check
from .errors import BudgetExceeded, NotRealizable
from .seqcore import BoundedSeq, conjugate, normal_trim_positions, trim

MAX_CELLS = 10**6


@dataclass(frozen=True, eq=False)
class Bitournament:
    """Orientation of K_{m,n}; ``arcs[i, j]`` is True for x_i -> y_j, False for y_j -> x_i."""

    arcs: np.ndarray

    def __post_init__(self):
        arcs = np.array(self.arcs, dtype=bool, copy=True)
        if arcs.ndim != 2:
            raise ValueError(f"arc matrix must be 2-D, got shape {arcs.shape}")
        if arcs.size > MAX_CELLS:
            raise BudgetExceeded(f"{arcs.shape[0]}x{arcs.shape[1]} exceeds {MAX_CELLS} arcs")
        arcs.flags.writeable = False
        object.__setattr__(self, "arcs", arcs)

    @property
    def m(self) -> int:
        return self.arcs.shape[0]

    @property
    def n(self) -> int:
        return self.arcs.shape[1]

    def __eq__(self, other):
        if not isinstance(other, Bitournament):
            return NotImplemented
        return self.arcs.shape == other.arcs.shape and bool((self.arcs == other.arcs).all())

    def __hash__(self):
        return hash((self.arcs.shape, self.arcs.tobytes()))


@dataclass(frozen=True)
class RealizationLog:
    """``choices[i]`` are the y-indices hit from x_i; ``states[i]`` is conj(B) after step i.

    ``states[0]`` is the untouched conj(B), so ``len(states) == m + 1``.
    """

    choices: tuple[tuple[int, ...], ...]
    states: tuple[BoundedSeq, ...]


def scores_of(t: Bitournament) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(x-scores, y-scores) in index order."""
    x = t.arcs.sum(axis=1)
    y = t.m - t.arcs.sum(axis=0)
    return tuple(int(v) for v in x), tuple(int(v) for v in y)


def realize(pair: FeasiblePair) -> tuple[Bitournament, RealizationLog]:
    """Build a bitournament whose x_i has score ``pair.a[i]`` and y_j has ``pair.b[j]``.

    Raises NotRealizable with the rejecting trimming report.
    """
    report = trim_check(pair.a, pair.b)
    if not report.accepted:
        raise NotRealizable(report)
    m, n = pair.m, pair.n
    if m * n > MAX_CELLS:
        raise BudgetExceeded(f"{m}x{n} exceeds {MAX_CELLS} arcs")
    arcs = np.zeros((m, n), dtype=bool)
    state = conjugate(pair.b)
    states = [state]
    choices = []
    for i, a_i in enumerate(pair.a):
        chosen = normal_trim_positions(state.elems, a_i)
        # greedy-step safety: a trimming that exists never runs short here
        assert len(chosen) == a_i
        arcs[i, chosen] = True
        state = trim(state, chosen)
        states.append(state)
        choices.append(tuple(sorted(chosen)))
    assert state.is_zero()
    return Bitournament(arcs), RealizationLog(tuple(choices), tuple(states))


def to_dot(
    t: Bitournament,
    labels: Optional[tuple[Sequence[str], Sequence[str]]] = None,
    name: str = "bitournament",
) -> str:
    """DOT digraph text.

    One line per vertex (x's, then y's), then every x->y arc in row-major
    order, then every y->x arc in row-major order. ``labels`` is an optional
    ``(x_labels, y_labels)`` pair used as display labels.
    """
    lines = [f"digraph {name} {{"]
    for side, count in (("x", t.m), ("y", t.n)):
        names = None if labels is None else labels[0 if side == "x" else 1]
        for k in range(count):
            if names is None:
                lines.append(f"  {side}{k + 1};")
            else:
                text = str(names[k]).replace("\\", "\\\\").replace('"', '\\"')
                lines.append(f'  {side}{k + 1} [label="{text}"];')
    rows, cols = np.nonzero(t.arcs)
    lines.extend(f"  x{i + 1} -> y{j + 1};" for i, j in zip(rows, cols))
    rows, cols = np.nonzero(~t.arcs)
    lines.extend(f"  y{j + 1} -> x{i + 1};" for i, j in zip(rows, cols))
    lines.append("}")
    return "\n".join(lines) + "\n"
