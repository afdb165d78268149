#!/usr/bin/env python3
"""Watch mutation steer edge counts by comparing algebraic connectivity.

Below the target's lambda2 the operator only adds edges (high- or low-degree
biased depending on how fragile the graph is); above it, it only removes,
undoing any removal that would disconnect.
"""

import numpy as np

from spectra_evolve import (
    Graph,
    MutationParams,
    algebraic_connectivity,
    make_circulant,
    make_star,
    mutate,
)

rng = np.random.default_rng(7)
params = MutationParams(alpha=1.0, beta=4)


def walk(g, target, label, steps=12):
    target_l2 = algebraic_connectivity(target)
    print(f"\n{label}: target lambda2 = {target_l2:.4f}")
    print(f"  step  0: m={g.edge_count:4d}  lambda2={algebraic_connectivity(g):.4f}")
    for step in range(1, steps + 1):
        g = mutate(g, target_l2, params, rng)
        if step % 3 == 0:
            print(f"  step {step:2d}: m={g.edge_count:4d}  "
                  f"lambda2={algebraic_connectivity(g):.4f}")
    return g


# sparse path toward a dense circulant: edges pour in
path24 = Graph(24, [(i, i + 1) for i in range(23)])
walk(path24, make_circulant(24, list(range(1, 9))), "path -> dense circulant")

# complete graph toward a star: edges drain out, connectivity preserved
k24 = Graph(24, [(i, j) for i in range(24) for j in range(i + 1, 24)])
final = walk(k24, make_star(24), "complete -> star")
print(f"\nstill connected after heavy removal: {final.is_connected()}")
