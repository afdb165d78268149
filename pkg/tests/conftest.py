"""Shared fixtures and independent oracle implementations.

The oracles here deliberately avoid the library's code paths: matrices are
assembled by explicit loops and solved with scipy, distances and path counts
come from direct enumeration.
"""

import math

import numpy as np
import pytest
import scipy.linalg

from spectra_evolve import Graph


def reference_normalized_laplacian(g: Graph) -> np.ndarray:
    """Normalized Laplacian assembled entry by entry from the edge list."""
    n = g.n
    deg = [g.degree(u) for u in range(n)]
    lap = np.zeros((n, n))
    for u in range(n):
        lap[u, u] = 1.0
    for u, v in g.edges():
        w = -1.0 / math.sqrt(deg[u] * deg[v])
        lap[u, v] = w
        lap[v, u] = w
    return lap


def reference_spectrum(g: Graph) -> np.ndarray:
    """Eigenvalues via scipy on the loop-built Laplacian, ascending."""
    return np.sort(scipy.linalg.eigvalsh(reference_normalized_laplacian(g)))


def star_spectrum(n: int) -> np.ndarray:
    """Analytic star spectrum: {0, 1 (n-2 times), 2}."""
    return np.array([0.0] + [1.0] * (n - 2) + [2.0])


def complete_spectrum(n: int) -> np.ndarray:
    """Analytic complete-graph spectrum: {0, n/(n-1) (n-1 times)}."""
    return np.array([0.0] + [n / (n - 1)] * (n - 1))


def circulant_spectrum(n: int, offsets: list[int]) -> np.ndarray:
    """Cosine formula for circulant normalized-Laplacian eigenvalues.

    Offset n/2 (even n) contributes a single edge per vertex, so its cosine
    term carries weight 1 instead of 2.
    """
    weights = {j: (1 if 2 * j == n else 2) for j in offsets}
    k = sum(weights.values())
    lam = []
    for m in range(n):
        s = sum(w * math.cos(2.0 * math.pi * j * m / n) for j, w in weights.items())
        lam.append(1.0 - s / k)
    return np.sort(np.array(lam))


def reachability_closure(g: Graph) -> np.ndarray:
    """Floyd-Warshall style boolean reachability matrix."""
    n = g.n
    reach = np.eye(n, dtype=bool)
    for u, v in g.edges():
        reach[u, v] = reach[v, u] = True
    for k in range(n):
        for i in range(n):
            if reach[i, k]:
                reach[i] |= reach[k]
    return reach


def random_connected_graph(rng: np.random.Generator, n: int, p: float = 0.4) -> Graph:
    """Rejection-sample a connected Erdos-Renyi-style graph."""
    iu, iv = np.triu_indices(n, k=1)
    while True:
        mask = rng.random(len(iu)) < p
        g = Graph(n, zip(iu[mask].tolist(), iv[mask].tolist()))
        if g.is_connected():
            return g


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
