"""Genetic operators on connected fixed-size graphs.

Mutation adds or removes edges depending on how the graph's algebraic
connectivity compares to the target's; additions are degree-biased.  The
three crossovers exchange vertex subsets: ``bc`` swaps uniformly random
subsets, ``sc1`` and ``sc2`` cut along the Fiedler bisection so that cluster
structure survives recombination.  Every operator returns connected graphs
of unchanged size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .spectral import algebraic_connectivity, fiedler_bisection

VALID_CROSSOVERS = ("bc", "sc1", "sc2")

#: attempts per biased edge addition before the step degrades to a no-op
ADD_RETRIES_PER_VERTEX = 10


@dataclass(frozen=True)
class MutationParams:
    """Mutation rate, strength (edge ops per mutated graph), and the
    algebraic-connectivity floor below which low-degree bias kicks in."""

    alpha: float = 0.75
    beta: int = 4
    lambda2_threshold: float = 0.001

    def validate(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"mutation rate must be in [0, 1], got {self.alpha}")
        if self.beta < 1:
            raise ValueError(f"mutation strength must be positive, got {self.beta}")
        if self.lambda2_threshold <= 0.0:
            raise ValueError(f"threshold must be > 0, got {self.lambda2_threshold}")


@dataclass(frozen=True)
class CrossoverVariant:
    """Crossover selector; ``nu`` is the minimal subset size (bc only)."""

    tag: str = "sc2"
    nu: int = 3

    def validate(self) -> None:
        if self.tag not in VALID_CROSSOVERS:
            raise ValueError(f"crossover must be one of {VALID_CROSSOVERS}, got {self.tag!r}")
        if self.nu < 2:
            raise ValueError(f"minimal subset size must be >= 2, got {self.nu}")


@dataclass
class CrossoverStats:
    """Edge bookkeeping for one crossover invocation."""

    cut_edges_deleted: int = 0
    cross_edges_added: int = 0
    repair_edges_added: int = 0


# -- mutation -----------------------------------------------------------------


def degree_biased_vertex(degrees: np.ndarray, rng: np.random.Generator,
                         inverse: bool = False) -> int:
    """Sample a vertex with probability proportional to degree (or 1/degree)."""
    weights = 1.0 / degrees if inverse else degrees.astype(np.float64)
    return int(rng.choice(len(degrees), p=weights / weights.sum()))


def mutate(g: Graph, target_lambda2: float, params: MutationParams,
           rng: np.random.Generator) -> Graph:
    """Connectivity-guided edge mutation.

    With probability 1 - alpha the graph is returned unchanged.  Otherwise
    beta edge operations run, all in the direction fixed by comparing the
    graph's algebraic connectivity (computed once) to the target's: additions
    while below or equal, removals while above.  Additions favor high-degree
    endpoints unless the graph is barely connected (lambda2 at or below the
    threshold, or minimum degree < 2), in which case low-degree endpoints are
    favored.  Removals that would disconnect are undone and redrawn; the
    result is always connected.
    """
    if rng.random() >= params.alpha:
        return g
    lam2 = algebraic_connectivity(g)
    adj = [set(s) for s in g._adj]
    m = g.edge_count
    if lam2 <= target_lambda2:
        for _ in range(params.beta):
            degrees = np.fromiter((len(s) for s in adj), dtype=np.int64, count=g.n)
            high_bias = lam2 > params.lambda2_threshold and int(degrees.min()) >= 2
            if _add_biased_edge(adj, degrees, not high_bias, rng):
                m += 1
    else:
        for _ in range(params.beta):
            if _remove_random_edge(adj, rng):
                m -= 1
    return Graph._from_adj(g.n, adj, m)


def _add_biased_edge(adj: list[set[int]], degrees: np.ndarray, inverse: bool,
                     rng: np.random.Generator) -> bool:
    n = len(adj)
    for _ in range(ADD_RETRIES_PER_VERTEX * n):
        u = degree_biased_vertex(degrees, rng, inverse=inverse)
        candidates = [v for v in range(n) if v != u and v not in adj[u]]
        if candidates:
            v = candidates[int(rng.integers(len(candidates)))]
            adj[u].add(v)
            adj[v].add(u)
            return True
    return False


def _remove_random_edge(adj: list[set[int]], rng: np.random.Generator) -> bool:
    edges = _edge_list(adj)
    if not edges:
        return False
    # a tree has no removable edge, so cap the undo-and-redraw loop
    for _ in range(10 * len(edges)):
        u, v = edges[int(rng.integers(len(edges)))]
        adj[u].discard(v)
        adj[v].discard(u)
        if _connected(adj):
            return True
        adj[u].add(v)
        adj[v].add(u)
    return False


def _edge_list(adj: list[set[int]]) -> list[tuple[int, int]]:
    out = [(u, v) for u in range(len(adj)) for v in adj[u] if v > u]
    out.sort()
    return out


def _connected(adj: list[set[int]]) -> bool:
    n = len(adj)
    seen = bytearray(n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == n


# -- crossover helpers ---------------------------------------------------------


def _cut_edge_count(g: Graph, part: set[int]) -> int:
    cut = 0
    for u in part:
        for v in g._adj[u]:
            if v not in part:
                cut += 1
    return cut


def _random_cross_pairs(size_a: int, size_b: int, budget: int,
                        rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform sample of distinct (i, j) pairs, i in block a, j in block b."""
    total = size_a * size_b
    take = min(budget, total)
    if take == 0:
        return []
    picks = rng.choice(total, size=take, replace=False)
    return [divmod(int(p), size_b) for p in picks]


def _assemble_child(piece_a: tuple[Graph, list[int]], piece_b: tuple[Graph, list[int]],
                    budget: int, rng: np.random.Generator,
                    stats: CrossoverStats) -> Graph:
    """Glue two induced subgraphs into one graph, joined by random cross edges.

    Vertices of piece_a map to 0..s-1 in sorted order, piece_b to s..n-1.
    ``budget`` cross edges are drawn uniformly among the absent cross pairs;
    connectivity is repaired afterwards if needed.
    """
    ga, verts_a = piece_a
    gb, verts_b = piece_b
    s = len(verts_a)
    n = s + len(verts_b)
    pos_a = {v: i for i, v in enumerate(verts_a)}
    pos_b = {v: s + i for i, v in enumerate(verts_b)}
    adj: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u in verts_a:
        iu = pos_a[u]
        for v in ga._adj[u]:
            if v > u and v in pos_a:
                adj[iu].add(pos_a[v])
                adj[pos_a[v]].add(iu)
                m += 1
    for u in verts_b:
        iu = pos_b[u]
        for v in gb._adj[u]:
            if v > u and v in pos_b:
                adj[iu].add(pos_b[v])
                adj[pos_b[v]].add(iu)
                m += 1
    cross = _random_cross_pairs(s, n - s, budget, rng)
    for i, j in cross:
        adj[i].add(s + j)
        adj[s + j].add(i)
        m += 1
    stats.cross_edges_added += len(cross)
    child = Graph._from_adj(n, adj, m)
    child, extra = repair_connectivity(child, set(range(s)), set(range(s, n)), rng)
    stats.repair_edges_added += extra
    return child


def _rounded_average(d1: int, d2: int) -> int:
    return (d1 + d2 + 1) // 2  # round half up


# -- the three crossovers --------------------------------------------------------


def basic_crossover(pop: list[Graph], nu: int,
                    rng: np.random.Generator) -> tuple[list[Graph], CrossoverStats]:
    """Random-subset crossover: swap complementary induced subgraphs.

    Runs len(pop)/2 rounds.  Each picks two parents uniformly (with
    replacement), one subset size s uniform on [nu, n-nu], and an independent
    random s-subset per parent; boundary-crossing edges are dropped and the
    complementary pieces are swapped into two size-n children, re-joined by
    the rounded average of the two parents' dropped-edge counts.
    """
    ell = len(pop)
    if ell % 2 != 0:
        raise ValueError(f"population size must be even, got {ell}")
    n = pop[0].n
    if nu > n - nu:
        raise ValueError(f"need nu <= n - nu, got nu={nu}, n={n}")
    stats = CrossoverStats()
    children: list[Graph] = []
    for _ in range(ell // 2):
        p1 = pop[int(rng.integers(ell))]
        p2 = pop[int(rng.integers(ell))]
        s = int(rng.integers(nu, n - nu + 1))
        sub1 = sorted(int(v) for v in rng.choice(n, size=s, replace=False))
        sub2 = sorted(int(v) for v in rng.choice(n, size=s, replace=False))
        comp1 = sorted(set(range(n)) - set(sub1))
        comp2 = sorted(set(range(n)) - set(sub2))
        d1 = _cut_edge_count(p1, set(sub1))
        d2 = _cut_edge_count(p2, set(sub2))
        stats.cut_edges_deleted += d1 + d2
        budget = _rounded_average(d1, d2)
        children.append(_assemble_child((p1, sub1), (p2, comp2), budget, rng, stats))
        children.append(_assemble_child((p2, sub2), (p1, comp1), budget, rng, stats))
    return children, stats


def spectral_crossover_1(pop: list[Graph],
                         rng: np.random.Generator) -> tuple[list[Graph], CrossoverStats]:
    """Fiedler-cut rewiring of single parents.

    Each of len(pop) rounds picks one parent uniformly, keeps the edges inside
    its two spectral clusters, and replaces the cut edges by the same number
    of uniformly random edges between the clusters.
    """
    ell = len(pop)
    stats = CrossoverStats()
    children: list[Graph] = []
    for _ in range(ell):
        g = pop[int(rng.integers(ell))]
        cut = fiedler_bisection(g)
        a, b = list(cut.cluster_a), list(cut.cluster_b)
        in_a = set(a)
        adj = [set() for _ in range(g.n)]
        m = 0
        deleted = 0
        for u, v in g.edges():
            if (u in in_a) != (v in in_a):
                deleted += 1
            else:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        stats.cut_edges_deleted += deleted
        for i, j in _random_cross_pairs(len(a), len(b), deleted, rng):
            u, v = a[i], b[j]
            adj[u].add(v)
            adj[v].add(u)
            m += 1
            stats.cross_edges_added += 1
        child = Graph._from_adj(g.n, adj, m)
        child, extra = repair_connectivity(child, in_a, set(b), rng)
        stats.repair_edges_added += extra
        children.append(child)
    return children, stats


def spectral_crossover_2(pop: list[Graph],
                         rng: np.random.Generator) -> tuple[list[Graph], CrossoverStats]:
    """Population-wide Fiedler cuts with subgraph exchange across parents.

    Every parent is bisected; its complementary pieces are filed under the
    size group min(s, n-s).  Within each group, small pieces are matched to
    large pieces by a random derangement (so no parent reconnects to its own
    complement unless the group holds a single pair, where the operator
    coincides with the single-parent spectral crossover).  Each match is glued
    with the rounded average of the two parents' cut-edge counts.
    """
    stats = CrossoverStats()
    groups: dict[int, list[tuple[list[int], list[int], Graph, int]]] = {}
    for g in pop:
        cut = fiedler_bisection(g)
        a, b = list(cut.cluster_a), list(cut.cluster_b)
        d = _cut_edge_count(g, set(a))
        stats.cut_edges_deleted += d
        small, large = (a, b) if len(a) <= len(b) else (b, a)
        groups.setdefault(len(small), []).append((small, large, g, d))
    children: list[Graph] = []
    for size in sorted(groups):
        entries = groups[size]
        match = _derangement(len(entries), rng)
        for i, j in enumerate(match):
            small, _, g_small, d_small = entries[i]
            _, large, g_large, d_large = entries[j]
            budget = _rounded_average(d_small, d_large)
            children.append(
                _assemble_child((g_small, small), (g_large, large), budget, rng, stats)
            )
    return children, stats


def _derangement(m: int, rng: np.random.Generator) -> np.ndarray:
    if m == 1:
        return np.zeros(1, dtype=np.int64)
    while True:
        perm = rng.permutation(m)
        if not np.any(perm == np.arange(m)):
            return perm


def apply_crossover(variant: CrossoverVariant, pop: list[Graph],
                    rng: np.random.Generator) -> tuple[list[Graph], CrossoverStats]:
    variant.validate()
    if variant.tag == "bc":
        return basic_crossover(pop, variant.nu, rng)
    if variant.tag == "sc1":
        return spectral_crossover_1(pop, rng)
    return spectral_crossover_2(pop, rng)


# -- connectivity repair ----------------------------------------------------------


def repair_connectivity(g: Graph, part_a: set[int], part_b: set[int],
                        rng: np.random.Generator) -> tuple[Graph, int]:
    """Reconnect a fragmented graph with uniformly random component-joining
    edges, preferring endpoints on opposite sides of the given partition.

    Connected inputs come back unchanged.  A graph with c components gains
    exactly c - 1 edges; the count is returned for run diagnostics.
    """
    if g.is_connected():
        return g, 0
    adj = [set(s) for s in g._adj]
    m = g.edge_count
    comps = g.connected_components()
    added = 0
    while len(comps) > 1:
        idx = rng.choice(len(comps), size=2, replace=False)
        i, j = int(idx[0]), int(idx[1])
        c1, c2 = comps[i], comps[j]
        pairs = [(u, v) for u in c1 for v in c2 if (u in part_a) != (v in part_a)]
        if not pairs:
            pairs = [(u, v) for u in c1 for v in c2]
        u, v = pairs[int(rng.integers(len(pairs)))]
        adj[u].add(v)
        adj[v].add(u)
        m += 1
        added += 1
        merged = sorted(c1 + c2)
        comps = [c for k, c in enumerate(comps) if k not in (i, j)]
        comps.append(merged)
        comps.sort(key=lambda c: c[0])
    return Graph._from_adj(g.n, adj, m), added
