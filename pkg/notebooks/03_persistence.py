"""
Barcodes of a Vietoris-Rips filtration
======================================

The four corners of a unit square: sides 1, diagonals sqrt(2).  At
distance 1 the sides close a loop, which is filled once the diagonals
appear.
"""

import math

import numpy as np

from jgbtda.homology import betti_curve, build_filtration, compute_persistence, euler_characteristic_check

r2 = math.sqrt(2)
square = np.array([[0, 1, r2, 1], [1, 0, 1, r2], [r2, 1, 0, 1], [1, r2, 1, 0]])
filtration = build_filtration(square, max_dim=3)
intervals = compute_persistence(filtration)
for iv in intervals:
    print(f"H{iv.dimension}  [{iv.birth:.4f}, {iv.death:.4f})")

# %%
# The loop's representative is an explicit list of edges.
loop = next(iv for iv in intervals if iv.dimension == 1)
print("representative:", loop.representative)

# %%
# Betti numbers at a few thresholds.
taus = [0.5, 1.0, r2]
for k in (0, 1):
    print(f"beta_{k}:", betti_curve(intervals, k, taus).samples)

# %%
# Alternating sums of simplex counts and of Betti numbers agree at every tau.
full = compute_persistence(filtration, include_top=True)
print(all(euler_characteristic_check(filtration, full, t) for t in np.linspace(0, 2, 21)))
