"""
Spectral radius and Perron vectors
==================================

Power iteration on A + I converges even on bipartite graphs, whose spectra
are symmetric about zero.
"""

import numpy as np

from earspec import automorphism_orbits, rho_p3star, spectral_radius
from earspec.extremal import gen_p3star

for n in (6, 8, 10, 20, 40):
    res = spectral_radius(gen_p3star(n))
    print(f"n={n:2}  rho={res.rho:.12f}  closed form={rho_p3star(n):.12f}  iterations={res.iterations}")

# Vertices in one orbit of the automorphism group carry equal Perron weight.
g = gen_p3star(10)
x = np.array(spectral_radius(g).perron)
for orbit in automorphism_orbits(g):
    print("orbit", orbit, "perron", np.round(x[orbit], 6))
