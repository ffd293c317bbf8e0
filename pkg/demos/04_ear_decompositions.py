"""
Ear decompositions and grades
=============================

Bipartite matching covered graphs grow from a single edge by odd ears whose
ends sit in opposite colour classes. Factor-critical blocks grow the same
way from an odd cycle.
"""

from earspec import (
    Ear,
    add_ear,
    cycle_graph,
    ear_grades,
    find_bipartite_ear_decomposition,
    find_odd_ear_decomposition,
    is_minimal_matching_covered,
    parallel_families,
)
from earspec.extremal import gen_p3star

g = gen_p3star(10)
d = find_bipartite_ear_decomposition(g)
print("base edge:", d.base)
for ear in d.ears:
    print("  ear", ear.path, "length", ear.length)

grades, top = ear_grades(d)
print("grades:", grades, "highest:", top)
print("ears hanging off the starting cycle:", parallel_families(d, 0))

# One more ear between the two hubs: both ends lie on the last ear, they are
# nonadjacent and of opposite colour. The result is P3*(12), still minimal.
h, _ = add_ear(g, d, Ear([0, 10, 11, 1]))
print("hub to hub:", is_minimal_matching_covered(h).verdict)

# Ends on two different ears break that pattern, and minimality goes with it.
h, _ = add_ear(g, d, Ear([2, 10, 11, 5]))
cert = is_minimal_matching_covered(h)
print("across ears:", cert.verdict, "removable", cert.witness)

c7 = cycle_graph(7)
print("odd decomposition of C7:", find_odd_ear_decomposition(c7))
