"""
graph6 strings and canonical forms
==================================

Graphs travel between tools as graph6 lines. Isomorphic graphs share a
canonical form, which is what the enumerators use to discard duplicates.
"""

import random

from earspec import Graph, canonical_form, cycle_graph, parse_graph6, permute, to_graph6

# A 4-cycle, written out by hand.
c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("C4 as graph6:", to_graph6(c4))
print("decoded back:", parse_graph6(to_graph6(c4)).edges())

# Shuffle the labels a few times; the canonical form never moves.
rng = random.Random(1)
g = cycle_graph(8)
for _ in range(3):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = permute(g, perm)
    print(f"{to_graph6(h):>6}  ->  {canonical_form(h)}")
