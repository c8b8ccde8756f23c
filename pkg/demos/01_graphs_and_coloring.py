"""Graphs, colorings, and the subdivision criterion.

Builds a hexagon and a complete graph, colors them greedily and exactly,
and shows what the subdivision checker reports before and after subdividing.
"""
from raagbraid import (
    SimpleGraph,
    chromatic_number,
    essential_vertices,
    greedy_color,
    is_planar,
    is_sufficiently_subdivided,
    opposite_graph,
    subdivide_for,
)

hexagon = SimpleGraph.make(
    [f"a{i}" for i in range(1, 7)],
    [(f"a{i}", f"a{i % 6 + 1}") for i in range(1, 7)],
)

print("hexagon:", hexagon.n_vertices, "vertices,", hexagon.n_edges, "edges")
print("greedy coloring:", greedy_color(hexagon).as_dict)
print("chromatic number:", chromatic_number(hexagon).color_count)
print("planar:", is_planar(hexagon))
print("essential vertices:", sorted(essential_vertices(hexagon)) or "none")
print()

k4 = SimpleGraph.make("abcd", [(x, y) for i, x in enumerate("abcd") for y in "abcd"[i + 1 :]])
print("K4 chromatic number:", chromatic_number(k4).color_count)
print("K4 complement edges:", opposite_graph(k4).edges)

# four strands need room: arcs of 3 edges between essential vertices and no
# cycle shorter than 5
report = is_sufficiently_subdivided(k4, 4)
print("\nK4 sufficient for 4 strands?", report.ok)
for v in report.violations[:4]:
    print(f"  {v.kind} through {v.vertices}: {v.length} < {v.required}")

k4_sub = subdivide_for(k4, 4)
print("after subdividing:", k4_sub.n_vertices, "vertices,", k4_sub.n_edges, "edges")
print("sufficient now?", is_sufficiently_subdivided(k4_sub, 4).ok)
