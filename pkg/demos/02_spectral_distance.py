#!/usr/bin/env python3
"""The density distance is a pseudometric: relabelings and cospectral mates
sit at distance zero, structurally different graphs do not."""

import numpy as np

from spectra_evolve import (
    Graph,
    density,
    eigen_spectrum,
    make_circulant,
    make_star,
    spectral_distance,
)


def dist(g1, g2):
    return spectral_distance(density(eigen_spectrum(g1)), density(eigen_spectrum(g2)))


star4 = make_star(4)
cycle4 = make_circulant(4, [1])

rng = np.random.default_rng(1)
perm = rng.permutation(4)
relabeled = Graph(4, [(int(min(perm[u], perm[v])), int(max(perm[u], perm[v])))
                      for u, v in star4.edges()])

print(f"d(star4, star4)          = {dist(star4, star4):.3e}   (identity)")
print(f"d(star4, relabeled star) = {dist(star4, relabeled):.3e}   (relabeling-invariant)")
print(f"d(star4, cycle4)         = {dist(star4, cycle4):.3e}   (cospectral mates!)")
print(f"  both spectra: {np.round(eigen_spectrum(star4).eigenvalues, 6)}")

k4 = make_circulant(4, [1, 2])
print(f"d(star4, K4)             = {dist(star4, k4):.4f}   (different spectra)")

star24 = make_star(24)
dense = make_circulant(24, list(range(1, 9)))
sparse = make_circulant(24, list(range(1, 7)))
print(f"\nn=24 target separations:")
print(f"d(star, dense circulant)  = {dist(star24, dense):.4f}")
print(f"d(star, sparse circulant) = {dist(star24, sparse):.4f}")
print(f"d(dense, sparse circulant)= {dist(dense, sparse):.4f}")
