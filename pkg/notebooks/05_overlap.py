"""
Where cycles occur, and when they overlap
=========================================

Full occurrences walk the whole loop in order.  The overlap matrix marks,
for each cycle, the stretches of at least ``s`` consecutive notes drawn
from its node set.
"""

from importlib.resources import files

from jgbtda.cycles import extract_cycles
from jgbtda.homology import build_filtration, compute_persistence
from jgbtda.network import build_network, distance_matrix
from jgbtda.notation import parse_score
from jgbtda.overlap import find_full_occurrences, overlap_matrix, overlap_stats

score = parse_score((files("jgbtda") / "data" / "sample_dodeuri.jgb").read_text())
graph = build_network(score)
dist = distance_matrix(graph)
cycles = extract_cycles(compute_persistence(build_filtration(dist.to_numpy(), 2, 2.0)), graph, dist)

for c in cycles:
    events = find_full_occurrences(c, graph)
    print(f"cycle {c.number}: " + ", ".join(f"{e.kind}@{e.start_position}" for e in events))

# %%
# Rows are cycles, columns are note positions.
om = overlap_matrix(cycles, graph, s=4)
for number, row in zip(om.cycle_numbers, om.m):
    print(f"{number:>2} " + "".join("#" if x else "." for x in row))

# %%
# Denseness rises as s shrinks; overlap % counts runs that coincide with
# another cycle's run.
for s in (2, 4, 6):
    st = overlap_stats(overlap_matrix(cycles, graph, s))
    print(f"s={s}: denseness {st.denseness:.4f}, overlap {st.overlap_percent['run-pairs']:.2f}%")
