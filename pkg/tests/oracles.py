"""Independent brute-force oracles shared by the unit and acceptance tests.

None of these import the code paths they check.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations


# -- shortest paths ---------------------------------------------------------

def all_simple_paths(adj: dict[int, dict[int, int]], s: int, t: int):
    stack = [(s, (s,))]
    while stack:
        u, path = stack.pop()
        if u == t:
            yield path
            continue
        for v in adj[u]:
            if v not in path:
                stack.append((v, path + (v,)))


def brute_force_distance(adj, s, t, mode="min-hop") -> Fraction:
    """Exhaustive search under (hops, sum 1/w) or plain sum 1/w."""
    if s == t:
        return Fraction(0)
    best = None
    for path in all_simple_paths(adj, s, t):
        cost = sum(Fraction(1, adj[a][b]) for a, b in zip(path, path[1:]))
        key = (len(path), cost) if mode == "min-hop" else (cost,)
        if best is None or key < best[0]:
            best = (key, cost)
    return best[1]


def random_connected_graph(rng: random.Random, n: int, max_weight: int = 6, p_extra: float = 0.35):
    """Random spanning tree plus extra edges; weights in 1..max_weight."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {}
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges[(min(a, b), max(a, b))] = rng.randint(1, max_weight)
    for a, b in combinations(range(n), 2):
        if (a, b) not in edges and rng.random() < p_extra:
            edges[(a, b)] = rng.randint(1, max_weight)
    adj = {i: {} for i in range(n)}
    for (a, b), w in edges.items():
        adj[a][b] = adj[b][a] = w
    return edges, adj


# -- rational homology ------------------------------------------------------

def rational_rank(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free elimination on integer rows."""
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return 0
    rank = 0
    n_cols = len(rows[0])
    for col in range(n_cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        pv = pr[col]
        for i in range(rank + 1, len(rows)):
            r = rows[i]
            f = r[col]
            if f:
                new = [pv * x - f * y for x, y in zip(r, pr)]
                g = 0
                for x in new:
                    g = math.gcd(g, x)
                rows[i] = [x // g for x in new] if g > 1 else new
        rank += 1
        if rank == len(rows):
            break
    return rank


def vr_simplices(d, max_dim: int) -> list[tuple[tuple[int, ...], float]]:
    n = len(d)
    out = []
    for k in range(1, max_dim + 2):
        for vs in combinations(range(n), k):
            val = max((d[a][b] for a, b in combinations(vs, 2)), default=0.0)
            out.append((vs, float(val)))
    return out


class RationalPersistence:
    """Persistent Betti numbers of a VR filtration over Q, by rank counting."""

    def __init__(self, d, max_dim: int = 3):
        self.simplices = vr_simplices(d, max_dim)
        self.max_dim = max_dim
        self.values = sorted({v for _, v in self.simplices})
        self.by_dim = {k: [(vs, v) for vs, v in self.simplices if len(vs) == k + 1]
                       for k in range(max_dim + 1)}

    def _boundary(self, k: int, row_filter, col_filter) -> list[list[int]]:
        rows = [vs for vs, v in self.by_dim[k - 1] if row_filter(v)]
        cols = [vs for vs, v in self.by_dim[k] if col_filter(v)]
        index = {vs: i for i, vs in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, vs in enumerate(cols):
            for drop in range(len(vs)):
                face = vs[:drop] + vs[drop + 1:]
                if face in index:
                    mat[index[face]][j] = (-1) ** drop
        return mat

    @lru_cache(maxsize=None)
    def _rank_full(self, k: int, t: float) -> int:
        if k <= 0 or k > self.max_dim:
            return 0
        return rational_rank(self._boundary(k, lambda v: v <= t, lambda v: v <= t))

    @lru_cache(maxsize=None)
    def _rank_out(self, k: int, a: float, b: float) -> int:
        # rank of the (k+1)-boundary at b restricted to k-simplices absent at a
        return rational_rank(self._boundary(k + 1, lambda v: a < v <= b, lambda v: v <= b))

    def persistent_betti(self, k: int, a: float, b: float) -> int:
        n_k = sum(1 for _, v in self.by_dim[k] if v <= a)
        return (n_k - self._rank_full(k, a) - self._rank_full(k + 1, b)
                + self._rank_out(k, a, b))

    def betti(self, k: int, t: float) -> int:
        return self.persistent_betti(k, t, t)

    def intervals(self, k: int) -> list[tuple[float, float]]:
        """Multiset of positive-length intervals in dimension ``k < max_dim``."""
        vals = self.values
        m = len(vals)

        def pb(i, j):
            if i < 0:
                return 0
            return self.persistent_betti(k, vals[i], vals[j])

        out = []
        for i in range(m):
            for j in range(i + 1, m):
                mult = pb(i, j - 1) - pb(i, j) - pb(i - 1, j - 1) + pb(i - 1, j)
                out += [(vals[i], vals[j])] * mult
            mult = pb(i, m - 1) - pb(i - 1, m - 1)
            out += [(vals[i], math.inf)] * mult
        return sorted(out)


def random_dissimilarity(rng: random.Random, n: int, distinct: bool):
    """Symmetric zero-diagonal matrix; ``distinct`` gives generic values, else heavy ties."""
    pairs = list(combinations(range(n), 2))
    if distinct:
        vals = rng.sample(range(1, 10 * len(pairs)), len(pairs))
        vals = [v / 8 for v in vals]
    else:
        vals = [rng.randint(1, 4) / 2 for _ in pairs]
    d = [[0.0] * n for _ in range(n)]
    for (a, b), v in zip(pairs, vals):
        d[a][b] = d[b][a] = v
    return d


# -- overlap ----------------------------------------------------------------

def definition_overlap_entry(member: list[bool], j: int, s: int) -> int:
    """Literal existential check: some t, l >= 0 with t + l >= s - 1 and the
    window j-l .. j+t entirely inside the cycle."""
    d = len(member)
    for l in range(0, j + 1):
        for t in range(0, d - j):
            if t + l >= s - 1 and all(member[x] for x in range(j - l, j + t + 1)):
                return 1
    return 0


# -- scores -----------------------------------------------------------------

YUL = ("jung", "im", "nam", "hwang", "tae")


def token_of(degree: int) -> str:
    return YUL[degree % 5] + "'" * (degree // 5)


GRIDS = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)]


def random_jgb(rng: random.Random, n_lines: int, per_column: int = 6, with_breaks: bool = True) -> str:
    """A random grammatical JGB-v1 file whose note lengths stay on the 1/6 grid."""
    lines = [f"#title random {rng.randrange(10 ** 6)}", f"#jeonggan-per-column {per_column}"]
    prev = None
    for g in range(n_lines):
        rows, slots = rng.choice(GRIDS)
        slot = Fraction(1, rows * slots)
        row_texts = []
        for _ in range(rows):
            toks = []
            for _ in range(slots):
                options = ["pitch"]
                if prev is not None:
                    options += ["-", "="]
                    if prev <= 9:
                        options.append("^")
                    if prev <= 8:
                        options.append("^^")
                    if prev >= 2 and slot in (Fraction(1), Fraction(1, 3)):
                        options.append("vv")
                    if prev <= 9 and slot > Fraction(1, 6):
                        options.append("!")
                choice = rng.choice(options)
                if choice == "pitch":
                    prev = rng.randrange(11)
                    toks.append(token_of(prev))
                    continue
                toks.append(choice)
                if choice == "^" or choice == "!":
                    prev += 1
                elif choice == "^^":
                    prev += 2
                elif choice == "vv":
                    prev -= 2
            row_texts.append(" ".join(toks))
        line = " / ".join(row_texts)
        if rng.random() < 0.1:
            line += "   % comment"
        lines.append(line)
        if with_breaks and (g + 1) % per_column == 0:
            lines.append("|")
    return "\n".join(lines) + "\n"
