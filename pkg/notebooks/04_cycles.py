"""
Cycles in a piece
=================

Dimension-1 intervals of the note-distance filtration become numbered
cycles: node loops with their edge weights and distances.
"""

from importlib.resources import files

from jgbtda.cycles import extract_cycles, summarize_cycles
from jgbtda.homology import build_filtration, compute_persistence
from jgbtda.network import build_network, cycles_per_node, distance_matrix
from jgbtda.notation import parse_score

score = parse_score((files("jgbtda") / "data" / "sample_taryong.jgb").read_text())
graph = build_network(score)
dist = distance_matrix(graph)
intervals = compute_persistence(build_filtration(dist.to_numpy(), max_dim=2, max_filtration=2.0))
cycles = extract_cycles(intervals, graph, dist)

for c in cycles:
    names = " - ".join(graph.nodes[i].label for i in c.node_loop)
    print(f"cycle {c.number}: [{c.birth:.3f}, {c.death:.3f})  {names}")
    print("   weights", [e.weight for e in c.edges], "avg", round(c.average_weight, 3))

# %%
summary = summarize_cycles(cycles)
print(f"{summary.cycle_count} cycles, {summary.average_node_number:.2f} nodes, "
      f"weight {summary.average_weight:.3f} on average")

# %%
# Which cycles pass through each node.
for node, numbers in cycles_per_node(graph, cycles).items():
    if numbers:
        print(graph.nodes[node].label, numbers)
