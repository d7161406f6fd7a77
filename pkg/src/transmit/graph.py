"""Concrete rooted graphs and the brute-force BFS distance oracle.

Everything here is deliberately simple: the BFS oracle is the independent
check for every closed-form transmission formula, so it must stay obviously
correct. Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import ConnectivityError, ResourceLimitError, ValidationError

#: Sentinel distance for vertices a BFS could not reach.
UNREACHABLE = -1

#: Default guard for the O(V^2) oracle operations and for builders.
DEFAULT_VERTEX_CAP = 100_000


@dataclass(frozen=True)
class RootedGraph:
    """Undirected simple graph with a designated root vertex.

    ``adjacency[i]`` is the strictly increasing tuple of neighbors of
    vertex ``i``; vertices are ``0 .. vertex_count - 1``.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    root: int

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise ValidationError(f"vertex_count must be >= 1, got {n}")
        if len(self.adjacency) != n:
            raise ValidationError(
                f"adjacency has {len(self.adjacency)} rows for {n} vertices"
            )
        if not 0 <= self.root < n:
            raise ValidationError(f"root {self.root} out of range 0..{n - 1}")
        for i, row in enumerate(self.adjacency):
            prev = -1
            for j in row:
                if not 0 <= j < n:
                    raise ValidationError(f"neighbor {j} of {i} out of range")
                if j == i:
                    raise ValidationError(f"self-loop at vertex {i}")
                if j <= prev:
                    raise ValidationError(
                        f"adjacency[{i}] is not strictly increasing"
                    )
                prev = j
        for i, row in enumerate(self.adjacency):
            for j in row:
                if i not in self.adjacency[j]:
                    raise ValidationError(f"edge {i}-{j} is not symmetric")

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (low, high) pairs in deterministic order."""
        return [(i, j) for i in range(self.vertex_count) for j in self.adjacency[i] if i < j]


def graph_from_edges(
    vertex_count: int, edges: list[tuple[int, int]], root: int
) -> RootedGraph:
    """Build a RootedGraph from an edge list, sorting and deduplicating."""
    neighbors: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}")
        neighbors[u].add(v)
        neighbors[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in neighbors)
    return RootedGraph(vertex_count, adjacency, root)


@dataclass(frozen=True)
class DistanceHistogram:
    """Number of ordered vertex pairs at each hop distance."""

    counts: dict[int, int] = field(default_factory=dict)

    def total_pairs(self) -> int:
        return sum(self.counts.values())

    def transmission(self) -> int:
        """Recompute delta as sum of distance * pair count."""
        return sum(d * c for d, c in self.counts.items())


def bfs_distances(g: RootedGraph, source: int) -> list[int]:
    """Hop count from ``source`` to every vertex (UNREACHABLE if none)."""
    if not 0 <= source < g.vertex_count:
        raise ValidationError(
            f"source {source} out of range 0..{g.vertex_count - 1}"
        )
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    adjacency = g.adjacency
    frontier = [source]
    depth = 0
    while frontier:
        depth += 1
        next_frontier = []
        for v in frontier:
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = depth
                    next_frontier.append(w)
        frontier = next_frontier
    return dist


def is_connected(g: RootedGraph) -> bool:
    """True iff a single BFS from vertex 0 reaches every vertex."""
    return UNREACHABLE not in bfs_distances(g, 0)


def _require_connected(g: RootedGraph) -> None:
    if not is_connected(g):
        raise ConnectivityError(
            "graph is disconnected; transmission is undefined"
        )


def _check_cap(g: RootedGraph, max_vertices: int) -> None:
    if g.vertex_count > max_vertices:
        raise ResourceLimitError(g.vertex_count, max_vertices)


def vertex_transmission(g: RootedGraph, v: int) -> int:
    """Sum of hop distances from ``v`` to every vertex."""
    _require_connected(g)
    return sum(bfs_distances(g, v))


def root_transmission(g: RootedGraph) -> int:
    """Transmission of the root: sum of distances root -> every vertex."""
    return vertex_transmission(g, g.root)


def graph_transmission(g: RootedGraph, max_vertices: int = DEFAULT_VERTEX_CAP) -> int:
    """Sum of distances over all ordered vertex pairs, by per-source BFS.

    Runs one BFS per vertex; guarded by ``max_vertices`` because the total
    work is quadratic.
    """
    _check_cap(g, max_vertices)
    _require_connected(g)
    total = 0
    for source in range(g.vertex_count):
        total += sum(bfs_distances(g, source))
    return total


def distance_histogram(
    g: RootedGraph, max_vertices: int = DEFAULT_VERTEX_CAP
) -> DistanceHistogram:
    """Count ordered vertex pairs by hop distance."""
    _check_cap(g, max_vertices)
    _require_connected(g)
    counts: Counter[int] = Counter()
    for source in range(g.vertex_count):
        counts.update(bfs_distances(g, source))
    return DistanceHistogram(dict(sorted(counts.items())))
