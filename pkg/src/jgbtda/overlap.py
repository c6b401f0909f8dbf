"""Where cycles occur in the music.

Two views are provided.  *Full occurrences* are stretches of the node
sequence that walk around a cycle along its own edges, either closing the
loop (``closed``) or visiting every node once without closing
(``open-chain``).  The *overlap matrix on s-scale* marks, per cycle, every
position lying in a run of at least ``s`` consecutive notes drawn from the
cycle's node set, regardless of order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cycles import Cycle
from .network import MusicGraph

__all__ = [
    "OccurrenceEvent",
    "OverlapMatrix",
    "OverlapStats",
    "NS_MODES",
    "find_full_occurrences",
    "find_occurrences_in_sequence",
    "overlap_matrix",
    "membership_runs",
    "row_runs",
    "overlap_stats",
]

NS_MODES = ("run-pairs", "column-intervals")
DEFAULT_SCALE = 4


@dataclass(frozen=True)
class OccurrenceEvent:
    cycle_number: int
    start_position: int
    length: int
    kind: str  # "closed", "open-chain" or "set-run"

    @property
    def end_position(self) -> int:
        return self.start_position + self.length


def _directed_runs(loop: Sequence[int], sequence: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal windows stepping around ``loop`` in one consistent direction.

    Returns ``(start, n_nodes)`` pairs with ``n_nodes >= 2``.
    """
    k = len(loop)
    where = {v: i for i, v in enumerate(loop)}
    runs = []
    p = 0
    n = len(sequence)
    while p < n - 1:
        a, b = sequence[p], sequence[p + 1]
        if a not in where or b not in where:
            p += 1
            continue
        step = (where[b] - where[a]) % k
        if step not in (1, k - 1):
            p += 1
            continue
        q = p + 1
        while q + 1 < n and sequence[q + 1] in where and \
                (where[sequence[q + 1]] - where[sequence[q]]) % k == step:
            q += 1
        runs.append((p, q - p + 1))
        p = q
    return runs


def find_occurrences_in_sequence(loop: Sequence[int], sequence: Sequence[int], number: int = 0,
                                 loose: bool = False) -> list[OccurrenceEvent]:
    """Occurrence scan on a bare node sequence; see :func:`find_full_occurrences`."""
    k = len(loop)
    events = []
    for start, length in _directed_runs(loop, sequence):
        pos = start
        end = start + length
        while end - pos >= k + 1:
            events.append(OccurrenceEvent(number, pos, k + 1, "closed"))
            pos += k
        if end - pos >= k:
            events.append(OccurrenceEvent(number, pos, k, "open-chain"))
    if loose:
        covered = set()
        for e in events:
            covered.update(range(e.start_position, e.end_position))
        nodes = set(loop)
        p = 0
        while p + k <= len(sequence):
            window = sequence[p:p + k]
            if set(window) == nodes and len(set(window)) == k and \
                    not covered.intersection(range(p, p + k)):
                events.append(OccurrenceEvent(number, p, k, "set-run"))
                p += k
            else:
                p += 1
    events.sort(key=lambda e: (e.start_position, e.length))
    return events


def find_full_occurrences(cycle: Cycle, graph: MusicGraph, loose: bool = False) -> list[OccurrenceEvent]:
    """Whole-form occurrences of ``cycle`` in the music, in temporal order.

    Any starting node and either traversal direction is accepted.  A walk
    around the loop longer than one lap yields one ``closed`` event per lap
    (consecutive laps share their boundary note); a walk covering every node
    without closing yields an ``open-chain`` event.  With ``loose`` also
    reports ``set-run`` windows: ``node_count`` consecutive distinct notes
    forming the cycle's node set in any order.
    """
    return find_occurrences_in_sequence(cycle.node_loop, graph.node_sequence, cycle.number, loose)


def membership_runs(member: Sequence[bool]) -> list[tuple[int, int]]:
    """Maximal runs of true entries as half-open ``(start, end)`` pairs."""
    runs = []
    start = None
    for j, m in enumerate(member):
        if m and start is None:
            start = j
        elif not m and start is not None:
            runs.append((start, j))
            start = None
    if start is not None:
        runs.append((start, len(member)))
    return runs


@dataclass(frozen=True, eq=False)
class OverlapMatrix:
    s: int
    m: np.ndarray  # uint8, shape (k, d)
    cycle_numbers: tuple[int, ...] = ()

    @property
    def shape(self) -> tuple[int, int]:
        return self.m.shape


def overlap_row(nodes: frozenset[int] | set[int], sequence: Sequence[int], s: int) -> np.ndarray:
    row = np.zeros(len(sequence), dtype=np.uint8)
    for a, b in membership_runs([v in nodes for v in sequence]):
        if b - a >= s:
            row[a:b] = 1
    return row


def overlap_matrix(cycles: Sequence[Cycle], graph: MusicGraph, s: int = DEFAULT_SCALE) -> OverlapMatrix:
    if s < 1:
        raise ValueError(f"scale s must be >= 1, got {s}")
    seq = graph.node_sequence
    m = np.zeros((len(cycles), len(seq)), dtype=np.uint8)
    for i, c in enumerate(cycles):
        m[i] = overlap_row(c.node_set(), seq, s)
    return OverlapMatrix(s, m, tuple(c.number for c in cycles))


def row_runs(om: OverlapMatrix) -> list[list[tuple[int, int]]]:
    return [membership_runs(row.astype(bool)) for row in om.m]


@dataclass(frozen=True)
class OverlapStats:
    A_c: int
    A_f: int
    denseness: float
    N_c: int
    N_s: dict[str, int]
    overlap_percent: dict[str, float]


def overlap_stats(om: OverlapMatrix) -> OverlapStats:
    """Area and simultaneity statistics of an overlap matrix.

    ``N_s`` is reported under both counting modes: ``run-pairs`` counts
    unordered pairs of runs from different rows whose spans intersect;
    ``column-intervals`` counts maximal stretches of columns where at least
    two rows are 1.
    """
    m = om.m
    a_c = int(m.sum())
    a_f = int(m.size)
    runs = row_runs(om)
    n_c = sum(len(r) for r in runs)

    pairs = 0
    for i in range(len(runs)):
        for j in range(i + 1, len(runs)):
            for a0, a1 in runs[i]:
                for b0, b1 in runs[j]:
                    if a0 < b1 and b0 < a1:
                        pairs += 1
    busy = (m.sum(axis=0) >= 2) if m.size else np.zeros(m.shape[1] if m.ndim == 2 else 0, bool)
    col_intervals = len(membership_runs(busy.tolist()))

    n_s = {"run-pairs": pairs, "column-intervals": col_intervals}
    pct = {k: (100.0 * v / n_c if n_c else 0.0) for k, v in n_s.items()}
    return OverlapStats(a_c, a_f, a_c / a_f if a_f else 0.0, n_c, n_s, pct)
