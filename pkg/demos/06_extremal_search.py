"""
Exhaustive search for the largest spectral radius
=================================================

Enumerate each class up to isomorphism and find which graph has the
largest spectral radius. The winners are P3* (bipartite) and the
friendship graph (factor-critical).
"""

from earspec import parse_graph6
from earspec.extremal import verify_theorem_1, verify_theorem_2

print("minimal matching covered bipartite graphs")
for n in (4, 6, 8, 10):
    rep = verify_theorem_1(n)
    print(f"  n={n:2}  {rep.count:3} graphs  max rho={rep.max_rho:.9f}  bound={rep.bound:.9f}  "
          f"winner={rep.argmax}")

print("minimal factor-critical graphs")
for n in (3, 5, 7, 9):
    rep = verify_theorem_2(n)
    winner = parse_graph6(rep.argmax[0])
    print(f"  n={n:2}  {rep.count:3} graphs  max rho={rep.max_rho:.9f}  "
          f"winner degrees={sorted(winner.degrees(), reverse=True)}")
