"""
A tour of the core toolkit
==========================

Build a few digraphs, measure them, and hunt for two-block subdivisions.
Run with:  python3 demos/tour_core_toolkit.py
"""

from twoblock.connectivity import cut_vertices_ordered, internally_disjoint_paths
from twoblock.digraph import build, degrees, serialize, to_dot
from twoblock.generators import complete_biorientation, theta
from twoblock.metrics import distance, girth, shortest_cycle
from twoblock.subdivision import find_subdivision, verify_witness

# A digraph is a vertex count plus a list of arcs.  Two triangles glued
# at vertex 0:
D = build(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
print("arc-list form:")
print(serialize(D))
print("degrees:", degrees(D))
print("girth:", girth(D), "  shortest cycle:", shortest_cycle(D).vertices)
print("dist(1, 4):", distance(D, 1, 4))

# Vertex 0 separates the triangles, so every 1 -> 4 path must pass it.
print("cut vertices between 1 and 4:", cut_vertices_ordered(D, 1, 4))

# Menger-style counting: largest family of paths sharing only endpoints.
K4 = complete_biorientation(4)
count, paths = internally_disjoint_paths(K4, 0, 1)
print("\nbioriented K4, 0 -> 1:", count, "disjoint paths")
for p in paths:
    print("  ", p.vertices)

# A two-block subdivision C(k, l) is two internally disjoint s -> t paths
# of lengths >= k and >= l.  The theta graph is the minimal example.
T = theta(2, 3)
w = find_subdivision(T, 2, 3)
print("\ntheta(2, 3) witness:", w.p1.vertices, "+", w.p2.vertices)
print("re-verifies:", verify_witness(T, w))

# Dense digraphs have them everywhere; a single cycle of length 3 cannot
# host C(3, 3) because the two blocks would need 6 arcs.
print("K4 has C(2, 2):", find_subdivision(K4, 2, 2) is not None)
print("triangle has C(3, 3):", find_subdivision(build(3, [(0, 1), (1, 2), (2, 0)]), 3, 3) is not None)

# DOT export for graphviz, when a picture helps.
print("\nDOT:")
print(to_dot(T))
