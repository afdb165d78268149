"""Target graph construction and connected initial populations.

Targets are stars and circulants.  Initial populations come from four
families: random k-regular (pairing model), Erdos-Renyi, Barabasi-Albert and
Watts-Strogatz.  Every generated graph is connected; family samplers redraw
until connectivity holds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .spectral import eigen_spectrum

#: draw attempts before a sampler gives up (signals parameters too sparse)
MAX_DRAWS = 1000

# family parameter defaults; stated for size-24 experiments but reused at
# every size unless overridden
DEFAULT_ER_P = 0.3
DEFAULT_BA_M0 = 8
DEFAULT_BA_M = 5
DEFAULT_WS_K = 4
DEFAULT_WS_BETA = 0.3


@dataclass(frozen=True)
class TargetSpec:
    """Target graph family: ``star`` or ``circulant`` (with offset list)."""

    kind: str
    n: int
    offsets: tuple[int, ...] = ()

    def validate(self) -> None:
        if self.kind == "star":
            if self.n < 3:
                raise ValueError(f"star target needs n >= 3, got {self.n}")
        elif self.kind == "circulant":
            if not self.offsets:
                raise ValueError("circulant target needs a non-empty offset list")
            if len(set(self.offsets)) != len(self.offsets):
                raise ValueError(f"duplicate circulant offsets {self.offsets}")
            for j in self.offsets:
                if not 1 <= j <= self.n // 2:
                    raise ValueError(f"offset {j} outside [1, {self.n // 2}]")
        else:
            raise ValueError(f"unknown target kind {self.kind!r}")

    def build(self) -> Graph:
        self.validate()
        if self.kind == "star":
            return make_star(self.n)
        return make_circulant(self.n, list(self.offsets))


@dataclass(frozen=True)
class InitSpec:
    """Initial-population family plus its parameters.

    ``family`` is one of ``regular``, ``erdos_renyi``, ``barabasi_albert``,
    ``watts_strogatz``.
    """

    family: str
    n: int
    count: int
    k: int = 0
    p: float = DEFAULT_ER_P
    m0: int = DEFAULT_BA_M0
    m: int = DEFAULT_BA_M
    ws_k: int = DEFAULT_WS_K
    ws_beta: float = DEFAULT_WS_BETA

    def validate(self) -> None:
        if self.count < 1:
            raise ValueError(f"population count must be >= 1, got {self.count}")
        if self.family == "regular":
            if (self.n * self.k) % 2 != 0 or not 0 < self.k < self.n:
                raise ValueError(f"invalid regular family: n={self.n}, k={self.k}")
        elif self.family == "erdos_renyi":
            if not 0.0 < self.p <= 1.0:
                raise ValueError(f"edge probability must be in (0, 1], got {self.p}")
        elif self.family == "barabasi_albert":
            if not self.m <= self.m0 < self.n:
                raise ValueError(f"need m <= m0 < n, got m={self.m}, m0={self.m0}, n={self.n}")
        elif self.family == "watts_strogatz":
            if self.ws_k < 1 or 2 * self.ws_k >= self.n or not 0.0 <= self.ws_beta <= 1.0:
                raise ValueError(
                    f"invalid Watts-Strogatz family: K={self.ws_k}, beta={self.ws_beta}, n={self.n}"
                )
        else:
            raise ValueError(f"unknown init family {self.family!r}")


def make_star(n: int) -> Graph:
    """Star: vertex 0 is the hub, vertices 1..n-1 are leaves."""
    if n < 3:
        raise ValueError(f"star needs n >= 3, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def make_circulant(n: int, offsets: list[int]) -> Graph:
    """Circulant: vertex i adjacent to (i +/- j) mod n for every offset j.

    Regular with degree 2*len(offsets), one less when n is even and n/2 is an
    offset (that ring diameter contributes a single edge per vertex).
    """
    if n < 3:
        raise ValueError(f"circulant needs n >= 3, got {n}")
    if not offsets:
        raise ValueError("offset list must be non-empty")
    if len(set(offsets)) != len(offsets):
        raise ValueError(f"duplicate offsets {offsets}")
    for j in offsets:
        if not 1 <= j <= n // 2:
            raise ValueError(f"offset {j} outside [1, {n // 2}]")
    edges = set()
    for j in offsets:
        for i in range(n):
            u, v = i, (i + j) % n
            edges.add((min(u, v), max(u, v)))
    g = Graph(n, sorted(edges))
    if not g.is_connected():
        raise ValueError(f"circulant with offsets {offsets} on {n} vertices is disconnected")
    return g


def make_erdos_renyi(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Each vertex pair is an edge independently with probability p; redraw
    until connected."""
    if not 0.0 < p <= 1.0:
        raise ValueError(f"edge probability must be in (0, 1], got {p}")
    iu, iv = np.triu_indices(n, k=1)
    for _ in range(MAX_DRAWS):
        mask = rng.random(len(iu)) < p
        g = Graph(n, zip(iu[mask].tolist(), iv[mask].tolist()))
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected draw in {MAX_DRAWS} attempts (n={n}, p={p}); p too small?")


def make_barabasi_albert(n: int, m0: int, m: int, rng: np.random.Generator) -> Graph:
    """Preferential attachment on a ring seed of m0 vertices.

    Each new vertex attaches m edges to distinct existing vertices drawn
    proportionally to degree; connected by construction.
    """
    if not 0 < m <= m0 <= n:
        raise ValueError(f"need 0 < m <= m0 <= n, got m={m}, m0={m0}, n={n}")
    edges: list[tuple[int, int]] = []
    if m0 == 2:
        edges.append((0, 1))
    elif m0 >= 3:
        edges.extend((i, (i + 1) % m0) for i in range(m0 - 1))
        edges.append((0, m0 - 1))
    # one entry per edge endpoint, so uniform draws are degree-proportional
    repeated: list[int] = [u for e in edges for u in e]
    for new in range(m0, n):
        targets: set[int] = set()
        if not repeated:
            targets.add(0)
        while len(targets) < m:
            targets.add(repeated[int(rng.integers(len(repeated)))])
        for t in sorted(targets):
            edges.append((t, new))
            repeated.append(t)
        repeated.extend([new] * len(targets))
    return Graph(n, edges)


def make_watts_strogatz(n: int, K: int, beta_ws: float, rng: np.random.Generator) -> Graph:
    """Ring lattice with K neighbors per side, each lattice edge rewired with
    probability beta_ws.

    A rewiring that would duplicate an edge or form a self-loop is skipped
    (original edge kept), so the edge count stays exactly n*K.  Redraws until
    connected.
    """
    if K < 1 or 2 * K >= n:
        raise ValueError(f"need 1 <= K and 2K < n, got K={K}, n={n}")
    if not 0.0 <= beta_ws <= 1.0:
        raise ValueError(f"rewiring probability must be in [0, 1], got {beta_ws}")
    for _ in range(MAX_DRAWS):
        edges = set()
        for j in range(1, K + 1):
            for i in range(n):
                u, v = i, (i + j) % n
                edges.add((min(u, v), max(u, v)))
        for j in range(1, K + 1):
            for i in range(n):
                if rng.random() >= beta_ws:
                    continue
                u, v = i, (i + j) % n
                w = int(rng.integers(n))
                key_new = (min(u, w), max(u, w))
                if w == u or key_new in edges:
                    continue
                edges.discard((min(u, v), max(u, v)))
                edges.add(key_new)
        g = Graph(n, sorted(edges))
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected Watts-Strogatz draw in {MAX_DRAWS} attempts (n={n}, K={K})")


def make_random_regular(n: int, k: int, rng: np.random.Generator) -> Graph:
    """Random k-regular simple graph via the pairing model.

    Stubs are shuffled and paired; colliding stubs (self-loops, duplicates)
    are re-paired until none remain or the attempt is stuck, in which case
    the whole pairing restarts.  Redraws until connected.
    """
    if (n * k) % 2 != 0:
        raise ValueError(f"n*k must be even, got n={n}, k={k}")
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    for _ in range(MAX_DRAWS):
        edges = _pair_stubs(n, k, rng)
        if edges is None:
            continue
        g = Graph(n, sorted(edges))
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected {k}-regular graph in {MAX_DRAWS} attempts (n={n})")


def _pair_stubs(n: int, k: int, rng: np.random.Generator) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n), k)
    while len(stubs):
        rng.shuffle(stubs)
        leftover: dict[int, int] = {}
        for s1, s2 in zip(stubs[::2].tolist(), stubs[1::2].tolist()):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                leftover[s1] = leftover.get(s1, 0) + 1
                leftover[s2] = leftover.get(s2, 0) + 1
        if not leftover:
            return edges
        if not _repairable(edges, leftover):
            return None
        stubs = np.array(
            [u for u, c in leftover.items() for _ in range(c)], dtype=np.int64
        )
    return edges


def _repairable(edges: set[tuple[int, int]], leftover: dict[int, int]) -> bool:
    # Stuck unless some pair of leftover stubs can still form a fresh edge.
    nodes = list(leftover)
    for i, s1 in enumerate(nodes):
        for s2 in nodes[i + 1:]:
            if (min(s1, s2), max(s1, s2)) not in edges:
                return True
    return False


def spectral_fingerprint(g: Graph, decimals: int = 6) -> tuple[float, ...]:
    """Eigenvalues rounded to 1e-6; a cheap distinctness surrogate.

    Cospectral non-isomorphic graphs collide, which is acceptable: the search
    only ever consumes spectra.
    """
    return tuple(np.round(eigen_spectrum(g).eigenvalues, decimals).tolist())


def make_initial_population(spec: InitSpec, rng: np.random.Generator) -> list[Graph]:
    """Exactly ``spec.count`` connected graphs from the requested family.

    For the regular family, draws with an already-seen spectral fingerprint
    are rejected so the population is pairwise spectrally distinct.
    """
    spec.validate()
    if spec.family == "regular":
        draw = lambda: make_random_regular(spec.n, spec.k, rng)
    elif spec.family == "erdos_renyi":
        draw = lambda: make_erdos_renyi(spec.n, spec.p, rng)
    elif spec.family == "barabasi_albert":
        draw = lambda: make_barabasi_albert(spec.n, spec.m0, spec.m, rng)
    else:
        draw = lambda: make_watts_strogatz(spec.n, spec.ws_k, spec.ws_beta, rng)

    population: list[Graph] = []
    seen: set[tuple[float, ...]] = set()
    for _ in range(spec.count):
        for _ in range(MAX_DRAWS):
            g = draw()
            if spec.family != "regular":
                population.append(g)
                break
            fp = spectral_fingerprint(g)
            if fp not in seen:
                seen.add(fp)
                population.append(g)
                break
        else:
            raise RuntimeError(
                f"could not draw {spec.count} spectrally distinct {spec.k}-regular graphs"
            )
    return population
