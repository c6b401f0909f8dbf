"""
From notes to a weighted graph
==============================

Every distinct (pitch, length) pair is a node.  Two nodes are joined when
they sound one after the other, weighted by how often that happens.
"""

from importlib.resources import files

from jgbtda.network import build_network, distance_matrix, frequency_table
from jgbtda.notation import parse_score

score = parse_score((files("jgbtda") / "data" / "sample_dodeuri.jgb").read_text())
graph = build_network(score)
print(f"{len(graph)} nodes, {len(graph.weights)} edges, {len(graph.node_sequence)} notes")
for i, node in enumerate(graph.nodes):
    print(f"n{i:<3} {node.label}")

# %%
# The heaviest edges are the transitions the piece repeats most.
top = sorted(graph.edges(), key=lambda e: -e[2])[:5]
print("heaviest edges:", [(f"n{i}", f"n{j}", w) for i, j, w in top])

# %%
# Distances: fewest hops first, then the smallest sum of 1/w.  Values are
# exact fractions; ``path`` shows the route that was used.
dist = distance_matrix(graph)
i, j = 0, len(graph) - 1
print(f"d(n{i}, n{j}) = {dist[i, j]} via {dist.path(i, j)}")
print("min-cost instead:", distance_matrix(graph, "min-cost")[i, j])

# %%
# Rank-frequency table, ready for a log plot.
for rank, node, count in frequency_table(graph).rows[:5]:
    print(rank, graph.nodes[node].label, count)
