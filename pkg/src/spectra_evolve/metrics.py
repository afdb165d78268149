"""Non-spectral graph metrics and the gap-product diversity contribution.

Path length, global clustering (transitivity), and betweenness centrality
describe how a set of evolved graphs differs structurally even when their
spectra agree; the diversity contribution of a value in a sorted sample is
the product of gaps to its nearest smaller and larger neighbors.
"""

from __future__ import annotations

import csv
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError
from .spectral import algebraic_connectivity

METRIC_NAMES = ("ac", "pl", "cc", "bc")


@dataclass(frozen=True)
class MetricSample:
    """The four per-graph metric values."""

    graph_id: str
    ac: float
    pl: float
    cc: float
    bc: float


@dataclass(frozen=True)
class DiversityReport:
    """Sorted normalized metric values with per-graph gap products.

    ``order[i]`` is the original index of the i-th smallest value; the first
    and last contributions are +inf sentinels (extremes have no two-sided
    gap) and are excluded from summary statistics.
    """

    metric: str
    order: np.ndarray
    values: np.ndarray
    contributions: np.ndarray


def _bfs_distances(g: Graph, source: int) -> np.ndarray:
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g._adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(v)
    return dist


def average_path_length(g: Graph) -> float:
    """Mean shortest-path length (hops) over all unordered vertex pairs."""
    if g.n < 2:
        raise GraphError("average path length needs n >= 2")
    total = 0
    for source in range(g.n):
        dist = _bfs_distances(g, source)
        if np.any(dist < 0):
            raise GraphError("average path length undefined for disconnected graphs")
        total += int(dist.sum())
    return total / (g.n * (g.n - 1))


def global_clustering(g: Graph) -> float:
    """Transitivity: 3 * triangles / connected triples; 0 when no triples."""
    if g.n < 3:
        raise GraphError("clustering coefficient needs n >= 3")
    deg = g.degrees
    triples = int((deg * (deg - 1)).sum()) // 2
    if triples == 0:
        return 0.0
    a = g.adjacency_matrix()
    closed = int(((a @ a) * a).sum())  # 6 * triangle count
    return (closed / 2) / triples


def betweenness_centrality(g: Graph) -> np.ndarray:
    """Shortest-path betweenness per vertex (unordered pairs, endpoints
    excluded), by breadth-first accumulation from every source."""
    bc = np.zeros(g.n)
    for source in range(g.n):
        # forward pass: BFS with shortest-path counts and predecessor lists
        dist = [-1] * g.n
        sigma = [0.0] * g.n
        preds: list[list[int]] = [[] for _ in range(g.n)]
        dist[source] = 0
        sigma[source] = 1.0
        order: list[int] = []
        queue = deque([source])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g._adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        if len(order) < g.n:
            raise GraphError("betweenness undefined for disconnected graphs")
        # backward pass: accumulate dependencies
        delta = [0.0] * g.n
        for w in reversed(order):
            for u in preds[w]:
                delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w])
            if w != source:
                bc[w] += delta[w]
    return bc / 2.0  # each unordered pair was counted from both endpoints


def average_betweenness(g: Graph) -> float:
    """Mean betweenness centrality over all vertices."""
    return float(betweenness_centrality(g).mean())


def metric_sample(g: Graph, graph_id: str = "",
                  metric_set: Sequence[str] = METRIC_NAMES) -> MetricSample:
    """Evaluate the requested metrics; the others come back as nan."""
    values = {name: float("nan") for name in METRIC_NAMES}
    for name in metric_set:
        if name == "ac":
            values[name] = algebraic_connectivity(g)
        elif name == "pl":
            values[name] = average_path_length(g)
        elif name == "cc":
            values[name] = global_clustering(g)
        elif name == "bc":
            values[name] = average_betweenness(g)
        else:
            raise ValueError(f"unknown metric {name!r}; choose from {METRIC_NAMES}")
    return MetricSample(graph_id=graph_id, **values)


def diversity_contributions(values: Sequence[float], metric: str = "") -> DiversityReport:
    """Gap-product diversity of a metric sample.

    Values are min-max normalized to [0, 1] and sorted; the contribution of an
    interior value is (gap to next smaller) * (gap to next larger).  Extremes
    get +inf sentinels so downstream selection never discards them.  An
    all-equal sample normalizes to zeros (every interior contribution 0).
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or len(arr) < 3:
        raise ValueError(f"diversity needs at least 3 values, got {arr.shape}")
    lo, hi = float(arr.min()), float(arr.max())
    norm = np.zeros_like(arr) if hi == lo else (arr - lo) / (hi - lo)
    order = np.argsort(norm, kind="stable")
    h = norm[order]
    div = np.full(len(h), np.inf)
    div[1:-1] = (h[1:-1] - h[:-2]) * (h[2:] - h[1:-1])
    return DiversityReport(metric=metric, order=order, values=h, contributions=div)


def write_metrics_csv(samples: Sequence[MetricSample], path: str | Path) -> None:
    """Metrics export: header ``graph_id,ac,pl,cc,bc``."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["graph_id"] + list(METRIC_NAMES))
        for s in samples:
            writer.writerow([s.graph_id, repr(s.ac), repr(s.pl), repr(s.cc), repr(s.bc)])


def write_diversity_csv(reports: Sequence[DiversityReport],
                        graph_ids: Sequence[str], path: str | Path) -> None:
    """Diversity export: header ``metric,graph_id,h_normalized,div`` with the
    literal ``inf`` marking the two extremes of each metric."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["metric", "graph_id", "h_normalized", "div"])
        for rep in reports:
            for pos, idx in enumerate(rep.order):
                div = rep.contributions[pos]
                writer.writerow([
                    rep.metric,
                    graph_ids[int(idx)],
                    repr(float(rep.values[pos])),
                    "inf" if np.isinf(div) else repr(float(div)),
                ])
