"""Fixed-size undirected simple graphs with edit primitives and edge-list I/O.

Graphs are value objects: the vertex count is fixed at construction and the
edit primitives return new graphs instead of mutating in place, so instances
can be shared freely between parallel workers.
"""

from __future__ import annotations

from collections import deque
from pathlib import Path
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Base class for graph construction and edit errors."""


class SelfLoopError(GraphError):
    """Requested edge would connect a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """Requested edge already exists."""


class MissingEdgeError(GraphError):
    """Requested edge does not exist."""


class Graph:
    """Undirected, unweighted simple graph on vertices ``0 .. n-1``.

    Edges are unordered pairs with no self-loops and no duplicates.  The
    neighbor sets give O(1) edge tests and O(deg) neighbor iteration.
    """

    __slots__ = ("n", "_adj", "_m", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        self.n = n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._m = 0
        self._hash: int | None = None
        for u, v in edges:
            self._insert(int(u), int(v))

    @classmethod
    def _from_adj(cls, n: int, adj: list[set[int]], m: int) -> "Graph":
        # Trusted fast path: takes ownership of adj without re-validation.
        g = cls.__new__(cls)
        g.n = n
        g._adj = adj
        g._m = m
        g._hash = None
        return g

    def _insert(self, u: int, v: int) -> None:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
        if v in self._adj[u]:
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    @property
    def degrees(self) -> np.ndarray:
        """Degree sequence; sums to ``2 * edge_count``."""
        return np.fromiter((len(s) for s in self._adj), dtype=np.int64, count=self.n)

    def neighbors(self, u: int) -> list[int]:
        return sorted(self._adj[u])

    def non_neighbors(self, u: int) -> list[int]:
        """Vertices ``v != u`` with no edge to ``u``, ascending."""
        adj = self._adj[u]
        return [v for v in range(self.n) if v != u and v not in adj]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(i, j)`` with ``i < j``, ascending lexicographic."""
        out = []
        for u in range(self.n):
            for v in self._adj[u]:
                if v > u:
                    out.append((u, v))
        out.sort()
        return out

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u in range(self.n):
            for v in self._adj[u]:
                a[u, v] = 1
        return a

    # -- edits (return new graphs) ----------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge ``{u, v}`` added; all other edges unchanged."""
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
        if v in self._adj[u]:
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        adj = [set(s) for s in self._adj]
        adj[u].add(v)
        adj[v].add(u)
        return Graph._from_adj(self.n, adj, self._m + 1)

    def remove_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge ``{u, v}`` removed.

        Connectivity is not checked; callers that must preserve it check
        the result and undo.
        """
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
        if v not in self._adj[u]:
            raise MissingEdgeError(f"edge ({u}, {v}) not present")
        adj = [set(s) for s in self._adj]
        adj[u].discard(v)
        adj[v].discard(u)
        return Graph._from_adj(self.n, adj, self._m - 1)

    # -- connectivity ------------------------------------------------------

    def is_connected(self) -> bool:
        """True iff breadth-first traversal from vertex 0 reaches every vertex."""
        if self.n == 1:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    queue.append(v)
        return count == self.n

    def connected_components(self) -> list[list[int]]:
        """Vertex sets of the connected components, each ascending."""
        seen = bytearray(self.n)
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = 1
            comp = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in self._adj[u]:
                    if not seen[v]:
                        seen[v] = 1
                        comp.append(v)
                        queue.append(v)
            comp.sort()
            comps.append(comp)
        return comps

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"

    def __reduce__(self):
        return (_rebuild_graph, (self.n, self.edges()))


def _rebuild_graph(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


# -- edge-list files --------------------------------------------------------
#
# Format: optional '#' comment lines, then a header line "n m", then exactly
# m lines "i j" with i < j in ascending lexicographic order.


def write_edge_list(g: Graph, path: str | Path) -> None:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    Path(path).write_text("\n".join(lines) + "\n")


def read_edge_list(path: str | Path) -> Graph:
    text = Path(path).read_text()
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and lines[idx].lstrip().startswith("#"):
        idx += 1
    if idx >= len(lines):
        raise GraphError(f"{path}: missing header line")
    header = lines[idx].split()
    if len(header) != 2:
        raise GraphError(f"{path}: header must be 'n m', got {lines[idx]!r}")
    n, m = int(header[0]), int(header[1])
    edges = []
    for line in lines[idx + 1:]:
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"{path}: malformed edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise GraphError(f"{path}: edge ({u}, {v}) must satisfy i < j")
        edges.append((u, v))
    if len(edges) != m:
        raise GraphError(f"{path}: header promises {m} edges, found {len(edges)}")
    return Graph(n, edges)
