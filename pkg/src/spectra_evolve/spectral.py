"""Normalized Laplacian spectra, smoothed spectral densities, and spectral cuts.

The spectral density of a graph is the unit-mass Gaussian mixture centered at
the normalized-Laplacian eigenvalues with bandwidth ``sigma = 1/n``; two
densities are compared by the L1 distance over [0, 2], which is a pseudometric
(cospectral non-isomorphic graphs are at distance zero).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graph import Graph, GraphError

#: eigenvalues within this of zero count as zero when classifying connectivity
ZERO_EIGENVALUE_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Sorted normalized-Laplacian eigenvalues with the kernel bandwidth.

    ``eigenvalues`` is ascending and clamped to [0, 2]; ``sigma`` is 1/n.
    """

    eigenvalues: np.ndarray
    sigma: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)


@dataclass(frozen=True)
class DensityGrid:
    """Spectral density sampled on a uniform grid over [0, 2]."""

    xs: np.ndarray
    phis: np.ndarray


@dataclass(frozen=True)
class Bisection:
    """Two-way spectral split of the vertex set by Fiedler-vector sign."""

    cluster_a: tuple[int, ...]
    cluster_b: tuple[int, ...]
    fiedler: np.ndarray


def grid_size(n: int) -> int:
    """Grid resolution; keeps spacing below sigma/2 = 1/(2n) for all n <= 512."""
    return max(2049, 8 * n + 1)


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Dense normalized Laplacian ``I - D^{-1/2} A D^{-1/2}``.

    Diagonal entries are 1; entry (i, j) is ``-1/sqrt(k_i k_j)`` for each edge.
    Raises GraphError if any vertex is isolated (D^{-1/2} undefined).
    """
    deg = g.degrees
    if np.any(deg == 0):
        isolated = int(np.argmin(deg))
        raise GraphError(f"vertex {isolated} is isolated; normalized Laplacian undefined")
    a = g.adjacency_matrix().astype(np.float64)
    # outer(k, k) is exactly symmetric, so the result is too
    scale = np.sqrt(np.outer(deg, deg))
    lap = np.eye(g.n) - a / scale
    return lap


def eigen_spectrum(g: Graph) -> Spectrum:
    """Full sorted eigenvalue set of the normalized Laplacian.

    Values are clamped to [0, 2] after the solve; their sum equals n up to
    floating tolerance (the Laplacian has unit diagonal).
    """
    if g.n < 2:
        raise GraphError("spectrum requires at least 2 vertices")
    w = np.linalg.eigvalsh(normalized_laplacian(g))
    w = np.clip(w, 0.0, 2.0)
    return Spectrum(eigenvalues=w, sigma=1.0 / g.n)


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest normalized-Laplacian eigenvalue.

    Zero (within ZERO_EIGENVALUE_TOL) iff the graph is disconnected; low
    values indicate sparse path-like structure, high values dense structure.
    """
    return float(eigen_spectrum(g).eigenvalues[1])


def density_values(sp: Spectrum, xs: np.ndarray) -> np.ndarray:
    """Evaluate the smoothed spectral density at arbitrary points.

    phi(x) = (1/n) * sum_i N(x; lambda_i, sigma^2).
    """
    lam = sp.eigenvalues
    n = len(lam)
    norm = 1.0 / (n * math.sqrt(2.0 * math.pi) * sp.sigma)
    z = np.subtract.outer(np.asarray(xs, dtype=np.float64), lam)
    z *= 1.0 / sp.sigma
    np.square(z, out=z)
    z *= -0.5
    np.exp(z, out=z)
    return norm * z.sum(axis=1)


def density(sp: Spectrum) -> DensityGrid:
    """Smoothed spectral density on the standard uniform grid over [0, 2]."""
    xs = np.linspace(0.0, 2.0, grid_size(sp.n))
    return DensityGrid(xs=xs, phis=density_values(sp, xs))


def spectral_distance(a: DensityGrid, b: DensityGrid) -> float:
    """Trapezoidal approximation of the L1 distance between two densities.

    Both grids must be identical; densities of equal-sized graphs always are.
    """
    if a.xs.shape != b.xs.shape or not np.array_equal(a.xs, b.xs):
        raise ValueError("density grids do not match; compare graphs of equal size")
    return float(np.trapezoid(np.abs(a.phis - b.phis), a.xs))


def fiedler_bisection(g: Graph) -> Bisection:
    """Split vertices into two clusters by the sign of the Fiedler vector.

    Non-negative entries form cluster_a.  Both clusters are forced to hold at
    least two vertices by moving the smallest-|entry| vertices out of the
    larger side; crossover needs two non-trivial sides.  When the second
    eigenvalue is degenerate (e.g. complete graphs) the solver's choice of
    eigenvector decides the cut.
    """
    if g.n < 4:
        raise GraphError(f"bisection requires n >= 4, got n={g.n}")
    _, vecs = np.linalg.eigh(normalized_laplacian(g))
    fiedler = vecs[:, 1]
    in_a = fiedler >= 0.0
    a = [i for i in range(g.n) if in_a[i]]
    b = [i for i in range(g.n) if not in_a[i]]
    while len(a) < 2:
        mover = min(b, key=lambda i: (abs(fiedler[i]), i))
        b.remove(mover)
        a.append(mover)
    while len(b) < 2:
        mover = min(a, key=lambda i: (abs(fiedler[i]), i))
        a.remove(mover)
        b.append(mover)
    return Bisection(tuple(sorted(a)), tuple(sorted(b)), fiedler)


def write_density_csv(grid: DensityGrid, path: str | Path) -> None:
    """Density export: header ``x,phi``, shortest round-trip float notation."""
    lines = ["x,phi"]
    lines.extend(f"{float(x)!r},{float(p)!r}" for x, p in zip(grid.xs, grid.phis))
    Path(path).write_text("\n".join(lines) + "\n")
