"""
Minimality through nice cycles
==============================

A cycle is nice when the rest of the graph has a perfect matching. For
bipartite matching covered graphs, minimality is the same as having no
nice cycle with a chord, and a chorded nice cycle is a short certificate
that some edge can go.
"""

from earspec import complete_bipartite_graph, enumerate_cycles, minimality_via_nice_cycles
from earspec.extremal import gen_p3star

k33 = complete_bipartite_graph(3, 3)
print("K3,3 has", len(enumerate_cycles(k33)), "cycles")

cert = minimality_via_nice_cycles(k33)
cycle, chord = cert.witness[1]
print("K3,3 minimal?", cert.verdict, "- nice cycle", cycle, "with chord", chord)

g = gen_p3star(10)
print("P3*(10) minimal?", minimality_via_nice_cycles(g).verdict)
