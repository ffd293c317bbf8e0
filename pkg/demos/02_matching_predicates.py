"""
Matching covered and factor-critical graphs
===========================================

Each predicate returns a certificate. A negative verdict carries something
you can check by hand: an edge that lies in no perfect matching, a
removable edge, or a vertex whose deletion leaves no perfect matching.
"""

from earspec import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_factor_critical,
    is_matching_covered,
    is_minimal_factor_critical,
    is_minimal_matching_covered,
    maximum_matching,
    path_graph,
)
from earspec.extremal import gen_friendship

k33 = complete_bipartite_graph(3, 3)
print("max matching of K3,3:", sorted(maximum_matching(k33)))

for name, g in [("C4", cycle_graph(4)), ("K3,3", k33), ("P4", path_graph(4))]:
    mc, mmc = is_matching_covered(g), is_minimal_matching_covered(g)
    print(f"{name:5} matching covered={mc.verdict!s:5} ({mc.note})  minimal={mmc.verdict!s:5} {mmc.witness}")

# Factor-critical graphs have odd order. K5 is factor-critical but far from minimal.
for name, g in [("C5", cycle_graph(5)), ("K5", complete_graph(5)), ("K1+3K2", gen_friendship(7))]:
    fc, mfc = is_factor_critical(g), is_minimal_factor_critical(g)
    print(f"{name:7} factor-critical={fc.verdict!s:5} minimal={mfc.verdict!s:5} {mfc.witness}")
