"""Numbered cycles from dimension-1 persistence intervals."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .homology import PersistenceInterval
from .network import DissimilarityMatrix, MusicGraph, distance_matrix

__all__ = [
    "CycleEdge",
    "Cycle",
    "CycleSetSummary",
    "RepresentativeError",
    "split_loops",
    "canonical_loop",
    "extract_cycles",
    "summarize_cycles",
]

log = logging.getLogger(__name__)


class RepresentativeError(ValueError):
    pass


@dataclass(frozen=True)
class CycleEdge:
    u: int
    v: int
    weight: int
    distance: Fraction


@dataclass(frozen=True)
class Cycle:
    number: int
    interval: tuple[float, float]
    node_loop: tuple[int, ...]
    edges: tuple[CycleEdge, ...]

    @property
    def node_count(self) -> int:
        return len(self.node_loop)

    @property
    def average_weight(self) -> float:
        return sum(e.weight for e in self.edges) / len(self.edges)

    @property
    def birth(self) -> float:
        return self.interval[0]

    @property
    def death(self) -> float:
        return self.interval[1]

    def node_set(self) -> frozenset[int]:
        return frozenset(self.node_loop)

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset((e.u, e.v)) for e in self.edges)


@dataclass(frozen=True)
class CycleSetSummary:
    cycle_count: int
    average_node_number: float
    average_weight: float


def split_loops(edges: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Decompose an even-degree edge set into edge-disjoint simple loops.

    Walks always take the smallest unused neighbour, so the result is
    deterministic.  Each loop is returned as a vertex sequence without the
    closing repeat.
    """
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        if u == v:
            raise RepresentativeError(f"self-loop at {u}")
        for a, b in ((u, v), (v, u)):
            s = adj.setdefault(a, set())
            if b in s:
                raise RepresentativeError(f"repeated edge ({u}, {v})")
            s.add(b)
    odd = sorted(v for v, nb in adj.items() if len(nb) % 2)
    if odd:
        raise RepresentativeError(f"edge set is not a cycle; odd-degree vertices {odd}")

    loops = []
    while any(adj.values()):
        start = min(v for v, nb in adj.items() if nb)
        path = [start]
        on_path = {start: 0}
        # only the walk's start can run out of edges, once the walk is back to it
        while adj[path[-1]]:
            u = path[-1]
            w = min(adj[u])
            adj[u].discard(w)
            adj[w].discard(u)
            if w in on_path:
                k = on_path[w]
                loops.append(tuple(path[k:]))
                for x in path[k + 1:]:
                    del on_path[x]
                del path[k + 1:]
            else:
                on_path[w] = len(path)
                path.append(w)
    return loops


def canonical_loop(loop: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest node, heading to its smaller neighbour."""
    loop = list(loop)
    k = loop.index(min(loop))
    loop = loop[k:] + loop[:k]
    if len(loop) > 2 and loop[-1] < loop[1]:
        loop = [loop[0]] + loop[:0:-1]
    return tuple(loop)


def _loop_edges(loop: Sequence[int]) -> list[frozenset[int]]:
    return [frozenset((loop[i], loop[(i + 1) % len(loop)])) for i in range(len(loop))]


def _select_loop(interval: PersistenceInterval) -> tuple[int, ...]:
    loops = split_loops(interval.representative)
    if not loops:
        raise RepresentativeError("empty representative")
    birth_edge = frozenset(interval.birth_simplex)
    chosen = next((lp for lp in loops if birth_edge in _loop_edges(lp)), loops[0])
    if len(loops) > 1:
        log.info("representative of [%s, %s) splits into %d loops; kept %s, dropped %s",
                 interval.birth, interval.death, len(loops), chosen,
                 [lp for lp in loops if lp is not chosen])
    return canonical_loop(chosen)


def extract_cycles(intervals: Iterable[PersistenceInterval], graph: MusicGraph,
                   distances: DissimilarityMatrix | None = None) -> list[Cycle]:
    """Turn dimension-1 intervals into cycles numbered by ascending death.

    Ties in death are broken by birth, then by the canonical node loop.
    Edges of a loop that never occur adjacently in the music get weight 0.
    """
    if distances is None:
        distances = distance_matrix(graph)
    raw = []
    for iv in intervals:
        if iv.dimension != 1:
            continue
        if iv.representative is None:
            raise RepresentativeError(f"interval [{iv.birth}, {iv.death}) has no representative")
        raw.append((iv.death, iv.birth, _select_loop(iv)))
    raw.sort()
    cycles = []
    for number, (death, birth, loop) in enumerate(raw, start=1):
        edges = tuple(
            CycleEdge(u, v, graph.weight(u, v), distances[u, v])
            for u, v in (sorted((loop[i], loop[(i + 1) % len(loop)])) for i in range(len(loop)))
        )
        cycles.append(Cycle(number, (birth, death), loop, edges))
    return cycles


def summarize_cycles(cycles: Sequence[Cycle]) -> CycleSetSummary:
    if not cycles:
        raise ValueError("cannot summarize an empty cycle list")
    n = len(cycles)
    return CycleSetSummary(
        n,
        sum(c.node_count for c in cycles) / n,
        sum(c.average_weight for c in cycles) / n,
    )
