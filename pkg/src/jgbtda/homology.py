"""Vietoris-Rips persistent homology over an explicit dissimilarity matrix.

Simplices are ordered by (filtration value, dimension, vertices) and the
boundary matrix is reduced column by column over GF(2), with columns stored
as Python integer bitmasks.  Dimension-1 intervals carry a representative
cycle: for a finite interval it is the reduced boundary column of the
triangle that kills the class, for an essential one the accumulated column
operations on the creating edge.

Homology of the top dimension ``max_dim`` is only that of the truncated
complex (no higher simplices exist to kill it) and is omitted unless
explicitly requested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Simplex",
    "Filtration",
    "PersistenceInterval",
    "BettiCurve",
    "FiltrationOrderError",
    "build_filtration",
    "compute_persistence",
    "betti_curve",
    "betti_numbers",
    "euler_characteristic_check",
    "boundary_mod2",
]


@dataclass(frozen=True)
class Simplex:
    vertices: tuple[int, ...]
    filtration_value: float

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def sort_key(self):
        return (self.filtration_value, len(self.vertices), self.vertices)

    def faces(self) -> list[tuple[int, ...]]:
        if len(self.vertices) == 1:
            return []
        return [f for f in combinations(self.vertices, len(self.vertices) - 1)]


class FiltrationOrderError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Filtration:
    simplices: tuple[Simplex, ...]
    max_dimension: int
    max_filtration: float
    n_vertices: int
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {s.vertices: k for k, s in enumerate(self.simplices)})

    def __len__(self):
        return len(self.simplices)

    def index_of(self, vertices: Sequence[int]) -> int:
        return self._index[tuple(vertices)]

    def value_of(self, vertices: Sequence[int]) -> float:
        return self.simplices[self._index[tuple(vertices)]].filtration_value

    def count(self, dim: int, tau: float) -> int:
        return sum(1 for s in self.simplices if s.dimension == dim and s.filtration_value <= tau)

    def validate(self):
        """Raise :class:`FiltrationOrderError` unless every face precedes its cofaces."""
        for k, s in enumerate(self.simplices):
            for face in s.faces():
                pos = self._index.get(face)
                if pos is None or pos >= k:
                    raise FiltrationOrderError(f"face {face} of {s.vertices} missing or out of order")
                if self.simplices[pos].filtration_value > s.filtration_value:
                    raise FiltrationOrderError(f"face {face} enters after {s.vertices}")


def _as_matrix(d) -> np.ndarray:
    if hasattr(d, "to_numpy"):
        d = d.to_numpy()
    m = np.asarray(d, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"dissimilarity matrix must be square, got shape {m.shape}")
    if np.isnan(m).any():
        raise ValueError("dissimilarity matrix contains NaN")
    if (m < 0).any():
        raise ValueError("dissimilarity matrix has negative entries")
    if not np.array_equal(m, m.T):
        raise ValueError("dissimilarity matrix is not symmetric")
    if np.any(np.diag(m) != 0):
        raise ValueError("dissimilarity matrix has a non-zero diagonal")
    return m


def build_filtration(d, max_dim: int = 3, max_filtration: float = math.inf) -> Filtration:
    """All simplices of dimension ``<= max_dim`` with diameter ``<= max_filtration``."""
    if not 0 <= max_dim <= 3:
        raise ValueError(f"max_dim must be in [0, 3], got {max_dim}")
    if not max_filtration > 0:
        raise ValueError("max_filtration must be positive")
    m = _as_matrix(d)
    n = m.shape[0]
    close = m <= max_filtration
    # higher-indexed neighbours within the cap
    upper = [[u for u in range(v + 1, n) if close[v, u]] for v in range(n)]

    out: list[Simplex] = []

    def expand(vertices: tuple[int, ...], value: float, candidates: list[int]):
        out.append(Simplex(vertices, value))
        if len(vertices) > max_dim:
            return
        for u in candidates:
            new_value = max(value, max(m[v, u] for v in vertices))
            nxt = [w for w in candidates if w > u and close[u, w]]
            expand(vertices + (u,), float(new_value), nxt)

    for v in range(n):
        expand((v,), 0.0, upper[v])
    out.sort(key=Simplex.sort_key)
    return Filtration(tuple(out), max_dim, float(max_filtration), n)


@dataclass(frozen=True)
class PersistenceInterval:
    dimension: int
    birth: float
    death: float
    representative: tuple[tuple[int, ...], ...] | None = None
    birth_simplex: tuple[int, ...] = ()
    death_simplex: tuple[int, ...] | None = None

    @property
    def persistence(self) -> float:
        return self.death - self.birth

    @property
    def is_essential(self) -> bool:
        return math.isinf(self.death)

    def alive_at(self, tau: float) -> bool:
        return self.birth <= tau < self.death


def _reduce(f: Filtration):
    """Column reduction with clearing, highest dimension first.

    Returns ``(pivot_row_to_col, reduced_columns, edge_cycles)`` where
    ``edge_cycles`` maps each edge whose column vanished to the bitmask of
    edges summing to a cycle born with it.
    """
    simplices = f.simplices
    by_dim: dict[int, list[int]] = {}
    for k, s in enumerate(simplices):
        by_dim.setdefault(s.dimension, []).append(k)

    pivot_of: dict[int, int] = {}
    reduced: dict[int, int] = {}
    cleared: set[int] = set()
    edge_v: dict[int, int] = {}
    edge_cycles: dict[int, int] = {}

    for dim in range(f.max_dimension, 0, -1):
        for j in by_dim.get(dim, ()):
            if j in cleared:
                continue
            col = 0
            for face in simplices[j].faces():
                col |= 1 << f.index_of(face)
            v = 1 << j
            while col:
                low = col.bit_length() - 1
                k = pivot_of.get(low)
                if k is None:
                    break
                col ^= reduced[k]
                if dim == 1:
                    v ^= edge_v[k]
            if dim == 1:
                edge_v[j] = v
            if col:
                low = col.bit_length() - 1
                pivot_of[low] = j
                reduced[j] = col
                cleared.add(low)
            elif dim == 1:
                edge_cycles[j] = v
    return pivot_of, reduced, edge_cycles


def _edges_of(mask: int, simplices: Sequence[Simplex]) -> tuple[tuple[int, ...], ...]:
    out = []
    while mask:
        low = mask.bit_length() - 1
        out.append(simplices[low].vertices)
        mask ^= 1 << low
    return tuple(sorted(out))


def compute_persistence(f: Filtration, include_zero: bool = False,
                        include_top: bool = False) -> list[PersistenceInterval]:
    """Persistence intervals of the filtration, sorted by (dim, birth, death).

    Zero-length pairs are dropped unless ``include_zero``; intervals in
    dimension ``f.max_dimension`` describe the truncated complex and are
    dropped unless ``include_top``.  Classes alive at the filtration cap get
    ``death = inf``.
    """
    f.validate()
    simplices = f.simplices
    pivot_of, reduced, edge_cycles = _reduce(f)
    top = f.max_dimension if include_top else f.max_dimension - 1
    intervals = []
    for low, j in pivot_of.items():
        s, t = simplices[low], simplices[j]
        if s.dimension > top:
            continue
        if not include_zero and s.filtration_value == t.filtration_value:
            continue
        rep = _edges_of(reduced[j], simplices) if s.dimension == 1 else None
        intervals.append(PersistenceInterval(s.dimension, s.filtration_value, t.filtration_value,
                                             rep, s.vertices, t.vertices))
    for k, s in enumerate(simplices):
        if s.dimension > top or k in pivot_of or k in reduced:
            continue
        rep = None
        if s.dimension == 1:
            rep = _edges_of(edge_cycles[k], simplices)
        intervals.append(PersistenceInterval(s.dimension, s.filtration_value, math.inf, rep,
                                             s.vertices, None))
    intervals.sort(key=lambda iv: (iv.dimension, iv.birth, iv.death, iv.birth_simplex))
    return intervals


@dataclass(frozen=True)
class BettiCurve:
    dimension: int
    samples: tuple[tuple[float, int], ...]


def betti_curve(intervals: Iterable[PersistenceInterval], dim: int,
                taus: Sequence[float]) -> BettiCurve:
    if any(a > b for a, b in zip(taus, taus[1:])):
        raise ValueError("taus must be sorted ascending")
    in_dim = [iv for iv in intervals if iv.dimension == dim]
    return BettiCurve(dim, tuple((float(t), sum(iv.alive_at(t) for iv in in_dim)) for t in taus))


def betti_numbers(intervals: Iterable[PersistenceInterval], tau: float) -> dict[int, int]:
    out: dict[int, int] = {}
    for iv in intervals:
        if iv.alive_at(tau):
            out[iv.dimension] = out.get(iv.dimension, 0) + 1
    return out


def euler_characteristic_check(f: Filtration, intervals: Iterable[PersistenceInterval],
                               tau: float) -> bool:
    """Compare the alternating simplex count with the alternating Betti sum at ``tau``.

    ``intervals`` must cover every dimension up to ``f.max_dimension``
    (``compute_persistence(f, include_top=True)``).
    """
    if tau < 0:
        raise ValueError("tau must be non-negative")
    chi = sum((-1) ** s.dimension for s in f.simplices if s.filtration_value <= tau)
    betti = betti_numbers(intervals, tau)
    return chi == sum((-1) ** k * b for k, b in betti.items() if k <= f.max_dimension)


def boundary_mod2(chain: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
    """GF(2) boundary of a chain given as a collection of vertex tuples."""
    out: set[tuple[int, ...]] = set()
    for simplex in chain:
        simplex = tuple(simplex)
        if len(simplex) == 1:
            continue
        for face in combinations(simplex, len(simplex) - 1):
            out ^= {face}
    return out
