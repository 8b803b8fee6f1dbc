"""Exhaustive enumeration used as extensional ground truth.

Orientations of K_{m,n} are encoded as ``m*n``-bit integers where bit
``i*n + j`` set means x_i -> y_j. Code ranges are swept in fixed-size
chunks; each chunk is an independent partial census and chunks merge by
adding counts, so the sweep can be farmed out to worker processes.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .characterize import moon_check, trim_check
from .errors import BudgetExceeded, Discrepancy

BITOURNAMENT_BITS = 24
TOURNAMENT_BITS = 24
DIGRAPH_BITS = 20
CHUNK_BITS = 18

Pair = tuple[tuple[int, ...], tuple[int, ...]]


class CensusEntry(NamedTuple):
    x_scores: tuple[int, ...]
    y_scores: tuple[int, ...]
    count: int


def _bits(lo: int, hi: int, width: int) -> np.ndarray:
    codes = np.arange(lo, hi, dtype=np.int64)
    return ((codes[:, None] >> np.arange(width, dtype=np.int64)) & 1).astype(np.int16)


def _count_rows(rows: np.ndarray, radices: list[int]) -> Counter:
    """Count identical rows; column ``k`` holds values in ``[0, radices[k])``.

    Rows are packed most-significant-first into one int64 key, so sorting
    keys sorts rows lexicographically.
    """
    weights = np.ones(len(radices), dtype=np.int64)
    for k in range(len(radices) - 2, -1, -1):
        weights[k] = weights[k + 1] * radices[k + 1]
    keys, counts = np.unique(rows.astype(np.int64) @ weights, return_counts=True)
    out = Counter()
    for key, c in zip(keys.tolist(), counts.tolist()):
        row = []
        for w in weights.tolist():
            digit, key = divmod(key, w)
            row.append(digit)
        out[tuple(row)] = c
    return out


def _bitournament_chunk(args) -> Counter:
    m, n, lo, hi = args
    bits = _bits(lo, hi, m * n).reshape(-1, m, n)
    x = np.sort(bits.sum(axis=2), axis=1)
    y = np.sort(m - bits.sum(axis=1), axis=1)
    return _count_rows(np.concatenate([x, y], axis=1), [n + 1] * m + [m + 1] * n)


def _chunks(total_bits: int) -> Iterator[tuple[int, int]]:
    total = 1 << total_bits
    step = 1 << CHUNK_BITS
    for lo in range(0, total, step):
        yield lo, min(lo + step, total)


def enumerate_bitournaments(m: int, n: int, workers: Optional[int] = None) -> list[CensusEntry]:
    """Census of sorted score pairs over all ``2**(m*n)`` orientations of K_{m,n}."""
    if m < 0 or n < 0:
        raise ValueError("sizes must be nonnegative")
    if m * n > BITOURNAMENT_BITS:
        raise BudgetExceeded(f"m*n={m * n} exceeds the 2^{BITOURNAMENT_BITS} orientation budget")
    if m * n == 0:
        return [CensusEntry((0,) * m, (0,) * n, 1)]
    jobs = [(m, n, lo, hi) for lo, hi in _chunks(m * n)]
    total = Counter()
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_bitournament_chunk, jobs))
    else:
        parts = map(_bitournament_chunk, jobs)
    for part in parts:
        total.update(part)
    return [CensusEntry(key[:m], key[m:], c) for key, c in sorted(total.items())]


def enumerate_tournaments(n: int) -> list[tuple[int, ...]]:
    """Distinct sorted score sequences over all orientations of K_n."""
    edges = list(combinations(range(n), 2))
    if len(edges) > TOURNAMENT_BITS:
        raise BudgetExceeded(f"C({n},2)={len(edges)} exceeds the 2^{TOURNAMENT_BITS} budget")
    if n == 0:
        return [()]
    # bit set on edge (u, v) means u beats v
    win = np.zeros((len(edges), n), dtype=np.int16)
    lose = np.zeros((len(edges), n), dtype=np.int16)
    for e, (u, v) in enumerate(edges):
        win[e, u] = 1
        lose[e, v] = 1
    seen = set()
    for lo, hi in _chunks(len(edges)):
        bits = _bits(lo, hi, len(edges))
        scores = bits @ win + (1 - bits) @ lose
        seen.update(_count_rows(np.sort(scores, axis=1), [n] * n))
    return sorted(seen)


def enumerate_digraphs(n: int, oriented_only: bool = False) -> list[tuple[int, ...]]:
    """Distinct sorted scores ``n - 1 + outdeg - indeg`` over all arc subsets.

    With ``oriented_only`` arc sets containing both u->v and v->u are skipped.
    """
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
    if len(arcs) > DIGRAPH_BITS:
        raise BudgetExceeded(f"n(n-1)={len(arcs)} exceeds the 2^{DIGRAPH_BITS} budget")
    if n == 0:
        return [()]
    net = np.zeros((len(arcs), n), dtype=np.int16)
    for e, (u, v) in enumerate(arcs):
        net[e, u] += 1
        net[e, v] -= 1
    index = {arc: e for e, arc in enumerate(arcs)}
    opposite = np.array([index[(v, u)] for u, v in arcs], dtype=np.intp)
    seen = set()
    for lo, hi in _chunks(len(arcs)):
        bits = _bits(lo, hi, len(arcs))
        if oriented_only:
            bits = bits[~(bits & bits[:, opposite]).any(axis=1)]
        scores = n - 1 + bits @ net
        seen.update(_count_rows(np.sort(scores, axis=1), [2 * n - 1] * n))
    return sorted(seen)


def candidate_pairs(m: int, n: int) -> Iterator[Pair]:
    """Every nondecreasing ``(m, n)``/``(n, m)`` pair whose elements total ``m*n``."""
    by_sum: dict[int, list[tuple[int, ...]]] = {}
    for b in combinations_with_replacement(range(m + 1), n):
        by_sum.setdefault(sum(b), []).append(b)
    for a in combinations_with_replacement(range(n + 1), m):
        for b in by_sum.get(m * n - sum(a), ()):
            yield a, b


@dataclass
class CrossValidation:
    m: int
    n: int
    orientations: int
    candidates: int
    realizable: set = field(default_factory=set)
    moon: set = field(default_factory=set)
    trimming: set = field(default_factory=set)

    def discrepancies(self) -> list[tuple[str, Pair]]:
        out = []
        for label, s in (("moon", self.moon), ("trimming", self.trimming)):
            out += [(f"oracle-only vs {label}", p) for p in sorted(self.realizable - s)]
            out += [(f"{label}-only vs oracle", p) for p in sorted(s - self.realizable)]
        return out

    def summary(self) -> str:
        return (
            f"K_{{{self.m},{self.n}}}: {self.orientations} orientations, "
            f"{self.candidates} candidate pairs, {len(self.realizable)} realizable, "
            f"moon {len(self.moon)}, trimming {len(self.trimming)}"
        )


def cross_validate(m: int, n: int, workers: Optional[int] = None) -> CrossValidation:
    """Three-way comparison of oracle, Moon and trimming on sorted pairs.

    Raises Discrepancy listing every pair in a symmetric difference.
    """
    census = enumerate_bitournaments(m, n, workers=workers)
    result = CrossValidation(m, n, orientations=2 ** (m * n), candidates=0)
    result.realizable = {(e.x_scores, e.y_scores) for e in census}
    for a, b in candidate_pairs(m, n):
        result.candidates += 1
        if moon_check(a, b).accepted:
            result.moon.add((a, b))
        if trim_check(a, b).accepted:
            result.trimming.add((a, b))
    # every census entry must lie in the universe the checks were run on
    missing = result.realizable - set(candidate_pairs(m, n))
    problems = [("outside candidate universe", p) for p in sorted(missing)]
    problems += result.discrepancies()
    if problems:
        raise Discrepancy(problems)
    return result


def census_csv(entries: list[CensusEntry]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x_scores", "y_scores", "count"])
    for e in entries:
        writer.writerow([";".join(map(str, e.x_scores)), ";".join(map(str, e.y_scores)), e.count])
    return buf.getvalue()
