"""Immutable simple undirected graphs and the structural queries used by the
coloring procedures (regularity, girth, diameter, short cycles)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import InputError

Vertex = int
Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the ascending tuple of neighbours of ``v``. Two graphs
    compare equal iff they have the same vertex count and edge set. ``labels``
    keeps the original vertex names of a graph loaded from a file; it does not
    take part in equality.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[Hashable, ...] | None = field(default=None, compare=False)
    _nbr_sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        if self.n < 0 or len(self.adjacency) != self.n:
            raise InputError("adjacency must have one entry per vertex")
        for v, row in enumerate(self.adjacency):
            if list(row) != sorted(set(row)):
                raise InputError(f"adjacency of {v} must be sorted and duplicate-free")
            for u in row:
                if not 0 <= u < self.n:
                    raise InputError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise InputError(f"self-loop at {v}")
        sets = tuple(frozenset(row) for row in self.adjacency)
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v not in sets[u]:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError("labels must have one entry per vertex")
        object.__setattr__(self, "_nbr_sets", sets)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
    ) -> Graph:
        """Build a graph, rejecting self-loops and repeated edges."""
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            if v in rows[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            rows[u].add(v)
            rows[v].add(u)
        return cls(
            n,
            tuple(tuple(sorted(r)) for r in rows),
            tuple(labels) if labels is not None else None,
        )

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.adjacency) // 2

    @property
    def max_degree(self) -> int:
        return max((len(r) for r in self.adjacency), default=0)

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InputError(f"vertex {v!r} out of range for n={self.n}")


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def is_regular(g: Graph) -> int | None:
    """Common degree of ``g``, or ``None`` if the degrees differ."""
    if g.n < 1:
        raise InputError("regularity is undefined for the empty graph")
    degs = {len(r) for r in g.adjacency}
    return degs.pop() if len(degs) == 1 else None


def bfs_distances(g: Graph, source: int, limit: int | None = None) -> list[int | None]:
    """Distances from ``source``; ``None`` for unreachable vertices or those
    beyond ``limit``."""
    g._check(source)
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        if limit is not None and dv >= limit:
            continue
        for u in g.adjacency[v]:
            if dist[u] is None:
                dist[u] = dv + 1
                queue.append(u)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    g._check(v)
    return bfs_distances(g, u)[v]


def eccentricity(g: Graph, v: int) -> int:
    """Largest distance from ``v`` to a vertex reachable from it."""
    return max(d for d in bfs_distances(g, v) if d is not None)


def diameter(g: Graph) -> int | None:
    """Largest pairwise distance; ``None`` if ``g`` is disconnected."""
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if any(d is None for d in dist):
            return None
        best = max(best, max(dist))
    return best


def is_connected(g: Graph) -> bool:
    return g.n == 0 or all(d is not None for d in bfs_distances(g, 0))


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, ``None`` for a forest.

    Runs a breadth-first search from every vertex; a non-tree edge met at
    depths ``a`` and ``b`` closes a closed walk of length ``a + b + 1``, and
    the minimum over all roots is the girth.
    """
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in g.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v]:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    if u == v:
        raise InputError("common_neighbors needs two distinct vertices")
    return g.neighbors(u) & g.neighbors(v)


def second_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Vertices at distance exactly 2 from ``v``."""
    dist = bfs_distances(g, v, limit=2)
    return frozenset(u for u, d in enumerate(dist) if d == 2)


def has_cycle_of_length(g: Graph, k: int) -> bool:
    """Whether ``g`` has a cycle on exactly ``k`` vertices, for k in {3, 4, 6}."""
    if k == 3:
        return any(
            g.neighbors(u) & g.neighbors(v) for u, v in g.edges()
        )
    if k == 4:
        return _has_c4(g)
    if k == 6:
        return _has_c6(g)
    raise InputError(f"unsupported cycle length {k}; expected 3, 4 or 6")


def _has_c4(g: Graph) -> bool:
    # Two distinct common neighbours of some pair close a 4-cycle.
    for v in range(g.n):
        seen: set[int] = set()
        for a in g.adjacency[v]:
            for w in g.adjacency[a]:
                if w == v:
                    continue
                if w in seen:
                    return True
                seen.add(w)
    return False


def _has_c6(g: Graph) -> bool:
    # A 6-cycle is two internally disjoint 3-edge paths between the same ends.
    for s in range(g.n):
        by_end: dict[int, list[tuple[int, int]]] = {}
        for a in g.adjacency[s]:
            for b in g.adjacency[a]:
                if b == s:
                    continue
                for t in g.adjacency[b]:
                    if t in (s, a) or t < s:
                        continue
                    by_end.setdefault(t, []).append((a, b))
        for paths in by_end.values():
            for i in range(len(paths)):
                a1, b1 = paths[i]
                for a2, b2 in paths[i + 1 :]:
                    if len({a1, b1, a2, b2}) == 4:
                        return True
    return False


def induced_edges(g: Graph, vertices: Iterable[int]) -> list[Edge]:
    vs = set(vertices)
    return [(u, v) for u, v in g.edges() if u in vs and v in vs]
