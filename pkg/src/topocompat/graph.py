"""Immutable simple undirected graphs with distance machinery.

Vertices are the integers 0..n-1.  Graphs are simple (no self-loops, no
parallel edges) and never mutated after construction, so instances can be
shared freely across threads.

The central transform here is :func:`graph_power`: connecting every pair of
vertices whose distance in the original graph is at most a given reachability.
Embedding searches run against the transformed graph, so adjacency is kept
both as sorted neighbor tuples and as per-vertex sets; per-vertex bitmasks
(arbitrary-width ints) are built lazily for the search kernels.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Optional, Sequence, Tuple

from .errors import InvalidEdge, InvalidParameter, InvalidReachability, InvalidVertex

__all__ = [
    "Graph",
    "DistanceMatrix",
    "from_edge_list",
    "all_pairs_distances",
    "diameter",
    "graph_power",
    "is_bipartite",
    "ball_size",
]


class Graph:
    """A simple undirected graph on vertices 0..n-1."""

    __slots__ = ("_n", "_edges", "_neighbors", "_nbr_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]]):
        if n < 1:
            raise InvalidParameter(f"graph order must be positive, got {n}")
        edge_set = set()
        for u, v in edges:
            if not (0 <= u < n):
                raise InvalidVertex(f"vertex {u} out of range 0..{n - 1}")
            if not (0 <= v < n):
                raise InvalidVertex(f"vertex {v} out of range 0..{n - 1}")
            if u == v:
                raise InvalidEdge(f"self-loop at vertex {u}")
            edge_set.add((u, v) if u < v else (v, u))
        adj = [[] for _ in range(n)]
        for u, v in edge_set:
            adj[u].append(v)
            adj[v].append(u)
        self._n = n
        self._edges = frozenset(edge_set)
        self._neighbors = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._nbr_sets = tuple(frozenset(nbrs) for nbrs in adj)
        self._masks: Optional[Tuple[int, ...]] = None

    @property
    def order(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset:
        """Edge set as frozenset of (u, v) pairs with u < v."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._neighbors[v])

    def max_degree(self) -> int:
        return max(len(nbrs) for nbrs in self._neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._nbr_sets[u]

    def adjacency_masks(self) -> Tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit v of mask u set iff u ~ v).

        Built on first use and cached; the arbitrary-width Python ints work
        for any order, and fit machine words for n <= 64 where the compiled
        search kernels apply.
        """
        if self._masks is None:
            masks = [0] * self._n
            for u, v in self._edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._masks = tuple(masks)
        return self._masks

    def sorted_edges(self) -> list:
        return sorted(self._edges)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise InvalidVertex(f"vertex {v} out of range 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"


class DistanceMatrix:
    """All-pairs shortest-path lengths; ``None`` marks unreachable pairs."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Optional[int]]]):
        self._rows = tuple(tuple(row) for row in rows)

    @property
    def order(self) -> int:
        return len(self._rows)

    def get(self, u: int, v: int) -> Optional[int]:
        return self._rows[u][v]

    def __getitem__(self, pair: Tuple[int, int]) -> Optional[int]:
        u, v = pair
        return self._rows[u][v]

    def row(self, u: int) -> Tuple[Optional[int], ...]:
        return self._rows[u]

    def max_finite(self) -> int:
        """Largest finite entry (0 for a single-vertex graph)."""
        return max(d for row in self._rows for d in row if d is not None)

    def all_reachable(self) -> bool:
        return all(d is not None for row in self._rows for d in row)

    def __repr__(self) -> str:
        return f"DistanceMatrix(order={len(self._rows)})"


def from_edge_list(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a graph from an order and edge pairs.

    Duplicate pairs and reversed duplicates collapse to one edge.  Raises
    InvalidVertex for endpoints outside 0..n-1 and InvalidEdge for self-loops.
    """
    return Graph(n, edges)


def _bfs_levels(g: Graph, source: int, cutoff: Optional[int] = None) -> dict:
    """Distances from source by BFS, optionally stopping at depth cutoff."""
    dist = {source: 0}
    queue = deque([source])
    nbrs = g._neighbors
    while queue:
        u = queue.popleft()
        du = dist[u]
        if cutoff is not None and du >= cutoff:
            continue
        for w in nbrs[u]:
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """All-pairs shortest-path lengths via BFS from every vertex."""
    n = g.order
    rows = []
    for s in range(n):
        dist = _bfs_levels(g, s)
        rows.append([dist.get(v) for v in range(n)])
    return DistanceMatrix(rows)


def diameter(g: Graph) -> "int | float":
    """Largest finite distance; ``math.inf`` when the graph is disconnected."""
    n = g.order
    worst = 0
    for s in range(n):
        dist = _bfs_levels(g, s)
        if len(dist) < n:
            return math.inf
        ecc = max(dist.values())
        if ecc > worst:
            worst = ecc
    return worst


def graph_power(g: Graph, reach: int) -> Graph:
    """Reachability transform: connect every pair at distance 1..reach.

    The vertex set is unchanged.  reach=1 is the identity and returns the
    input instance (graphs are immutable).  reach=0 is rejected: the edgeless
    transform has no use downstream and would leak degenerate cases into the
    embedding engine.
    """
    if reach < 1:
        raise InvalidReachability(f"reachability must be >= 1, got {reach}")
    if reach == 1:
        return g
    edges = []
    for s in range(g.order):
        dist = _bfs_levels(g, s, cutoff=reach)
        edges.extend((s, v) for v, d in dist.items() if s < v and 1 <= d <= reach)
    return Graph(g.order, edges)


def is_bipartite(g: Graph) -> bool:
    """True iff the graph has no odd cycle (BFS 2-coloring, per component)."""
    color = [-1] * g.order
    for root in range(g.order):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g._neighbors[u]:
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def ball_size(g: Graph, center: int, reach: int) -> int:
    """Number of vertices within distance reach of center, center included."""
    g._check_vertex(center)
    if reach < 0:
        raise InvalidReachability(f"reachability must be >= 0, got {reach}")
    return len(_bfs_levels(g, center, cutoff=reach))
