import math
import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from jgbtda.homology import (Filtration, FiltrationOrderError, Simplex, betti_curve, boundary_mod2,
                             build_filtration, compute_persistence, euler_characteristic_check)
from oracles import RationalPersistence, random_dissimilarity

R2 = math.sqrt(2)
SQUARE = [[0, 1, R2, 1], [1, 0, 1, R2], [R2, 1, 0, 1], [1, R2, 1, 0]]


def test_square_filtration_counts():
    f = build_filtration(SQUARE, 2, 2)
    dims = [s.dimension for s in f.simplices]
    assert len(f) == 14 and dims.count(0) == 4 and dims.count(1) == 6 and dims.count(2) == 4
    edges = [s.filtration_value for s in f.simplices if s.dimension == 1]
    assert edges.count(1.0) == 4 and edges.count(R2) == 2
    assert all(s.filtration_value == R2 for s in f.simplices if s.dimension == 2)


def test_single_point():
    f = build_filtration([[0]], 3)
    assert [s.vertices for s in f.simplices] == [(0,)]
    ivs = compute_persistence(f)
    assert [(iv.dimension, iv.birth, iv.death) for iv in ivs] == [(0, 0.0, math.inf)]
    assert euler_characteristic_check(f, compute_persistence(f, include_top=True), 5.0)


def test_complete_count_without_cap():
    d = random_dissimilarity(random.Random(3), 6, distinct=True)
    for max_dim in range(4):
        f = build_filtration(d, max_dim)
        assert len(f) == sum(math.comb(6, k + 1) for k in range(max_dim + 1))


def test_filtration_order_and_cap():
    d = random_dissimilarity(random.Random(5), 7, distinct=False)
    f = build_filtration(d, 3, 1.0)
    f.validate()
    keys = [s.sort_key() for s in f.simplices]
    assert keys == sorted(keys)
    assert all(s.filtration_value <= 1.0 for s in f.simplices)
    pairs = {s.vertices for s in f.simplices if s.dimension == 1}
    assert pairs == {(a, b) for a, b in combinations(range(7), 2) if d[a][b] <= 1.0}


@pytest.mark.parametrize("bad", [
    [[0, 1], [2, 0]],
    [[0, -1], [-1, 0]],
    [[1, 1], [1, 0]],
    [[0, 1, 2]],
])
def test_invalid_matrices(bad):
    with pytest.raises(ValueError):
        build_filtration(bad)


def test_order_violation_detected():
    f = Filtration((Simplex((0, 1), 1.0), Simplex((0,), 0.0), Simplex((1,), 0.0)), 1, 2.0, 2)
    with pytest.raises(FiltrationOrderError):
        compute_persistence(f)


def test_square_barcode():
    ivs = compute_persistence(build_filtration(SQUARE, 2, 2))
    h0 = sorted((iv.birth, iv.death) for iv in ivs if iv.dimension == 0)
    h1 = [(iv.birth, iv.death) for iv in ivs if iv.dimension == 1]
    assert h0 == [(0, 1), (0, 1), (0, 1), (0, math.inf)]
    assert h1 == [(1.0, R2)]


def test_square_betti_values():
    ivs = compute_persistence(build_filtration(SQUARE, 3))
    assert betti_curve(ivs, 0, [0, 0.5, 1, R2, 2]).samples == ((0, 4), (0.5, 4), (1, 1), (R2, 1), (2, 1))
    assert [b for _, b in betti_curve(ivs, 1, [0, 0.5, 1, R2, 2]).samples] == [0, 0, 1, 0, 0]
    assert betti_curve(ivs, 1, [0.1]).samples == ((0.1, 0),)
    with pytest.raises(ValueError):
        betti_curve(ivs, 0, [1, 0])


def test_square_euler():
    f = build_filtration(SQUARE, 3)
    ivs = compute_persistence(f, include_top=True)
    assert f.count(0, 1) - f.count(1, 1) == 0
    for tau in (0, 0.5, 1, R2, 2):
        assert euler_characteristic_check(f, ivs, tau)


def test_zero_persistence_pairs_kept_internally():
    f = build_filtration(SQUARE, 3)
    with_zero = compute_persistence(f, include_zero=True)
    assert any(iv.birth == iv.death for iv in with_zero)
    assert all(iv.birth < iv.death for iv in compute_persistence(f))


def _gf2_in_span(target: set, generators: list[set]) -> bool:
    universe = sorted(set().union(target, *generators))
    pos = {x: k for k, x in enumerate(universe)}

    def mask(s):
        return sum(1 << pos[x] for x in s)

    basis = {}
    for g in map(mask, generators):
        while g:
            top = g.bit_length() - 1
            if top not in basis:
                basis[top] = g
                break
            g ^= basis[top]
    t = mask(target)
    while t:
        top = t.bit_length() - 1
        if top not in basis:
            return False
        t ^= basis[top]
    return True


def check_representatives(d, f, ivs):
    for iv in ivs:
        if iv.dimension != 1:
            continue
        rep = set(iv.representative)
        assert rep and boundary_mod2(rep) == set()
        assert max(f.value_of(e) for e in rep) == iv.birth
        triangles = [set(boundary_mod2([s.vertices])) for s in f.simplices if s.dimension == 2]
        values = [s.filtration_value for s in f.simplices if s.dimension == 2]
        before = [t for t, v in zip(triangles, values) if v < iv.death]
        at_death = [t for t, v in zip(triangles, values) if v <= iv.death]
        assert not _gf2_in_span(rep, before)
        if not iv.is_essential:
            assert _gf2_in_span(rep, at_death)


def test_representatives_are_valid():
    rng = random.Random(11)
    for _ in range(40):
        d = random_dissimilarity(rng, rng.randint(4, 8), distinct=rng.random() < 0.5)
        f = build_filtration(d, 2)
        check_representatives(d, f, compute_persistence(f))


def test_essential_h1_representative():
    # square with the diagonals capped out: the loop never dies
    f = build_filtration(SQUARE, 2, 1.2)
    ivs = [iv for iv in compute_persistence(f) if iv.dimension == 1]
    assert len(ivs) == 1 and ivs[0].is_essential
    check_representatives(SQUARE, f, ivs)


def test_matches_rational_oracle_small_sweep():
    rng = random.Random(2024)
    for _ in range(30):
        d = random_dissimilarity(rng, rng.randint(4, 6), distinct=rng.random() < 0.5)
        ivs = compute_persistence(build_filtration(d, 3))
        oracle = RationalPersistence(d, 3)
        for k in range(3):
            assert sorted((iv.birth, iv.death) for iv in ivs if iv.dimension == k) == oracle.intervals(k)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(2, 8), st.floats(0.3, 2.0))
def test_cap_monotonicity_and_single_essential_component(seed, n, cap):
    d = random_dissimilarity(random.Random(seed), n, distinct=True)
    full = compute_persistence(build_filtration(d, 3))
    capped = compute_persistence(build_filtration(d, 3, cap))
    assert sum(1 for iv in full if iv.dimension == 0 and iv.is_essential) == 1
    keep = sorted((iv.dimension, iv.birth, iv.death) for iv in full if iv.death <= cap)
    have = sorted((iv.dimension, iv.birth, iv.death) for iv in capped if iv.death <= cap)
    assert keep == have
    assert all(iv.birth == 0 for iv in full if iv.dimension == 0)


def test_numpy_input_accepted():
    f = build_filtration(np.array(SQUARE), 2)
    assert len(f) == 4 + 6 + 4
