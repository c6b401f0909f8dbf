"""Music network: nodes are (pitch, length) pairs, edges count adjacencies.

The distance between two nodes sums ``1/w`` over the edges of a path.  The
default ``min-hop`` mode takes the path with the fewest edges (ties broken
by the smaller inverse-weight sum, then by the lexicographically smallest
node sequence); ``min-cost`` runs a plain shortest-path search on ``1/w``.
All distances are exact :class:`~fractions.Fraction` values.
"""

from __future__ import annotations

import heapq
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .notation import Pitch, Score

__all__ = [
    "Node",
    "MusicGraph",
    "DissimilarityMatrix",
    "FrequencyTable",
    "DisconnectedGraphError",
    "METRIC_MODES",
    "build_network",
    "distance_matrix",
    "frequency_table",
    "cycles_per_node",
]

METRIC_MODES = ("min-hop", "min-cost")


@dataclass(frozen=True, order=True)
class Node:
    """A (pitch, length) pair; ordering is pitch first, then length."""

    pitch: Pitch
    length: Fraction

    @property
    def label(self) -> str:
        return f"({self.pitch.scientific},{self.length})"


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MusicGraph:
    nodes: tuple[Node, ...]
    weights: dict[tuple[int, int], int]
    node_sequence: tuple[int, ...]
    _adjacency: dict[int, dict[int, int]] = field(init=False, repr=False)

    def __post_init__(self):
        adj: dict[int, dict[int, int]] = {i: {} for i in range(len(self.nodes))}
        for (i, j), w in self.weights.items():
            if not (0 <= i < j < len(self.nodes)) or w < 1:
                raise ValueError(f"bad edge ({i}, {j}) with weight {w}")
            adj[i][j] = w
            adj[j][i] = w
        object.__setattr__(self, "_adjacency", adj)

    @classmethod
    def from_sequence(cls, items: Sequence) -> "MusicGraph":
        """Build the network from any sequence of sortable, hashable node keys."""
        if len(items) == 0:
            raise ValueError("cannot build a network from an empty sequence")
        nodes = tuple(sorted(set(items)))
        index = {n: i for i, n in enumerate(nodes)}
        seq = tuple(index[x] for x in items)
        weights: Counter = Counter()
        for a, b in zip(seq, seq[1:]):
            if a != b:
                weights[(min(a, b), max(a, b))] += 1
        return cls(nodes, dict(sorted(weights.items())), seq)

    @classmethod
    def from_edges(cls, n_nodes: int, weights: dict[tuple[int, int], int]) -> "MusicGraph":
        """A graph with integer node keys and no temporal sequence."""
        norm = {(min(i, j), max(i, j)): int(w) for (i, j), w in weights.items()}
        return cls(tuple(range(n_nodes)), dict(sorted(norm.items())), ())

    def __len__(self):
        return len(self.nodes)

    def weight(self, i: int, j: int) -> int:
        """Edge weight, 0 when the nodes are never adjacent."""
        return self._adjacency[i].get(j, 0)

    def neighbors(self, i: int) -> list[int]:
        return sorted(self._adjacency[i])

    def edges(self) -> list[tuple[int, int, int]]:
        return [(i, j, w) for (i, j), w in self.weights.items()]

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        seen = {0}
        todo = [0]
        while todo:
            for v in self._adjacency[todo.pop()]:
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        return len(seen) == len(self.nodes)


def build_network(score: Score) -> MusicGraph:
    if not score.events:
        raise ValueError("cannot build a network from an empty score")
    return MusicGraph.from_sequence([Node(e.pitch, e.duration) for e in score.events])


@dataclass(frozen=True, eq=False)
class DissimilarityMatrix:
    values: tuple[tuple[Fraction, ...], ...]
    paths: dict[tuple[int, int], tuple[int, ...]]
    mode: str = "min-hop"

    def __len__(self):
        return len(self.values)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.values[i][j]

    def path(self, i: int, j: int) -> tuple[int, ...]:
        if i == j:
            return (i,)
        if i < j:
            return self.paths[(i, j)]
        return tuple(reversed(self.paths[(j, i)]))

    def to_numpy(self) -> np.ndarray:
        """Float copy used at the persistence boundary."""
        return np.array([[float(x) for x in row] for row in self.values], dtype=float).reshape(
            len(self.values), len(self.values))


def _min_hop_from(graph: MusicGraph, source: int) -> dict[int, tuple[Fraction, tuple[int, ...]]]:
    hops = {source: 0}
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in graph.neighbors(u):
            if v not in hops:
                hops[v] = hops[u] + 1
                order.append(v)
                queue.append(v)
    best: dict[int, tuple[Fraction, tuple[int, ...]]] = {source: (Fraction(0), (source,))}
    # BFS order visits every node after all nodes one hop closer
    for v in order[1:]:
        candidates = []
        for u in graph.neighbors(v):
            if hops[u] == hops[v] - 1:
                cost, path = best[u]
                candidates.append((cost + Fraction(1, graph.weight(u, v)), path + (v,)))
        best[v] = min(candidates)
    return best


def _min_cost_from(graph: MusicGraph, source: int) -> dict[int, tuple[Fraction, tuple[int, ...]]]:
    best: dict[int, tuple[Fraction, tuple[int, ...]]] = {}
    heap = [(Fraction(0), (source,))]
    while heap:
        cost, path = heapq.heappop(heap)
        u = path[-1]
        if u in best:
            continue
        best[u] = (cost, path)
        for v in graph.neighbors(u):
            if v not in best:
                heapq.heappush(heap, (cost + Fraction(1, graph.weight(u, v)), path + (v,)))
    return best


def distance_matrix(graph: MusicGraph, mode: str = "min-hop") -> DissimilarityMatrix:
    """Pairwise inverse-weight path distances over the network."""
    if mode not in METRIC_MODES:
        raise ValueError(f"unknown metric mode {mode!r}; expected one of {METRIC_MODES}")
    search = _min_hop_from if mode == "min-hop" else _min_cost_from
    n = len(graph)
    values = [[Fraction(0)] * n for _ in range(n)]
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for i in range(n):
        best = search(graph, i)
        if len(best) != n:
            missing = min(set(range(n)) - set(best))
            raise DisconnectedGraphError(f"no path between nodes {i} and {missing}")
        for j in range(i + 1, n):
            cost, path = best[j]
            values[i][j] = values[j][i] = cost
            paths[(i, j)] = path
    return DissimilarityMatrix(tuple(tuple(r) for r in values), paths, mode)


@dataclass(frozen=True)
class FrequencyTable:
    rows: tuple[tuple[int, int, int], ...]

    def log_points(self) -> list[tuple[int, float]]:
        """(rank, log10 count) pairs for a semi-log rank plot."""
        return [(rank, math.log10(count)) for rank, _, count in self.rows]


def frequency_table(graph: MusicGraph) -> FrequencyTable:
    counts = Counter(graph.node_sequence)
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return FrequencyTable(tuple((rank, node, c) for rank, (node, c) in enumerate(ordered, start=1)))


def cycles_per_node(graph: MusicGraph, cycles: Iterable) -> dict[int, list[int]]:
    """Map each node to the sorted numbers of the cycles passing through it."""
    membership: dict[int, list[int]] = {i: [] for i in range(len(graph))}
    for cycle in cycles:
        for node in set(cycle.node_loop):
            if node not in membership:
                raise ValueError(f"cycle {cycle.number} references unknown node {node}")
            membership[node].append(cycle.number)
    return {i: sorted(v) for i, v in membership.items()}
