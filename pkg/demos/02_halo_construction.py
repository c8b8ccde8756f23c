"""Halo synthesis and verification.

A halo carries one simple loop per source vertex: loops of adjacent vertices
stay disjoint, loops of non-adjacent vertices meet in exactly one vertex.
The demo builds the halo of a hexagon, inspects its loops, breaks an axiom
on purpose, and shows the verifier naming the failure.
"""
from raagbraid import (
    Halo,
    SimpleGraph,
    build_halo,
    chromatic_number,
    halo_to_dot,
    is_planar,
    verify_halo,
)

hexagon = SimpleGraph.make(
    [f"a{i}" for i in range(1, 7)],
    [(f"a{i}", f"a{i % 6 + 1}") for i in range(1, 7)],
)
coloring = chromatic_number(hexagon)
halo = build_halo(hexagon, coloring)

print("halo graph:", halo.gamma.n_vertices, "vertices,", halo.gamma.n_edges, "edges")
print("planar:", is_planar(halo.gamma))
print("basepoints:", dict(halo.basepoints))
for vertex, loop in halo.artin_loops:
    print(f"  loop of {vertex}: {' -> '.join(loop)}")
print("axioms hold:", verify_halo(halo).ok)

# sabotage: delete one edge used by the loop of a1
victim = halo.loop_edges("a1")[0]
broken = Halo(
    gamma=SimpleGraph.make(
        halo.gamma.vertices, [e for e in halo.gamma.edges if e != victim]
    ),
    artin_loops=halo.artin_loops,
    basepoints=halo.basepoints,
    coloring=halo.coloring,
    delta=halo.delta,
)
report = verify_halo(broken)
print("\nafter deleting", victim, "->", report.ok)
for violation in report.violations:
    print(f"  [{violation.axiom}] {violation.message}")

# DOT output for graphviz, loops color-coded
print("\nfirst lines of the DOT export:")
print("\n".join(halo_to_dot(halo).splitlines()[:5]))
