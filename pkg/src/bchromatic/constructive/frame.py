"""Frames: a colored region K plus an active vertex whose neighbourhood F is
being colored, and the bad-edge bookkeeping between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..coloring import Coloring
from ..errors import InfeasibleError, InputError
from ..graph import Graph


@dataclass(frozen=True)
class Frame:
    """Region K, active vertex, and its frame F = {active} + fresh neighbours.

    ``frozen`` lists F vertices whose color no move may change. ``anchors``
    lists F vertices whose color must stay outside the dominant colors of K.
    ``keep_dominant`` names vertices that must stay dominant under every move;
    ``None`` means every vertex dominant at the time of the move.
    """

    graph: Graph
    k_vertices: frozenset[int]
    active: int
    f_vertices: frozenset[int]
    coloring: Coloring
    frozen: frozenset[int] = frozenset()
    anchors: frozenset[int] = frozenset()
    keep_dominant: frozenset[int] | None = None

    def __post_init__(self):
        g = self.graph
        if self.k_vertices & self.f_vertices:
            raise InputError("K and F must be disjoint")
        if self.active not in self.f_vertices:
            raise InputError("the active vertex must belong to F")
        allowed = g.neighbors(self.active) | {self.active}
        if not self.f_vertices <= allowed:
            raise InputError("F must lie inside the closed neighbourhood of the active vertex")
        if not (self.frozen | self.anchors) <= self.f_vertices:
            raise InputError("frozen and anchor vertices must belong to F")
        col = self.coloring.assignment
        for v in self.k_vertices:
            if col[v] is None:
                raise InputError(f"K vertex {v} is uncolored")
            for u in g.adjacency[v]:
                if u in self.k_vertices and col[u] == col[v]:
                    raise InputError(f"K is not properly colored at edge ({v}, {u})")

    @property
    def palette(self) -> int:
        return self.coloring.palette

    def color(self, v: int) -> int | None:
        return self.coloring.assignment[v]

    def with_coloring(self, coloring: Coloring) -> Frame:
        return Frame(
            self.graph,
            self.k_vertices,
            self.active,
            self.f_vertices,
            coloring,
            self.frozen,
            self.anchors,
            self.keep_dominant,
        )


@dataclass(frozen=True)
class BadEdgeContext:
    """Local picture around one i-bad edge between F and K.

    ``u`` is the F end of the edge. ``a_set`` holds the movable F vertices
    whose color does not occur among the K-neighbours of ``u`` (``u`` could
    take any of those colors without a new conflict); ``b_set`` is the rest of
    the movable F vertices, ``u`` included. ``c_sets[l]`` lists the K vertices
    of color l adjacent to F minus the active vertex.
    """

    color_i: int
    u: int
    k_partner: int
    a_set: frozenset[int]
    b_set: frozenset[int]
    c_sets: Mapping[int, frozenset[int]] = field(compare=False)


@dataclass(frozen=True)
class RepairMove:
    kind: str  # swap | rotation3 | demote_dominant | global_color_rotation
    slots: Mapping[str, object]
    recolor: tuple[tuple[int, int, int], ...]  # (vertex, old color, new color)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "slots": {k: _plain(v) for k, v in sorted(self.slots.items())},
            "recolor": [list(t) for t in self.recolor],
        }


def _plain(value):
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    return value


def dominant_k_colors(frame: Frame, coloring: Coloring | None = None) -> frozenset[int]:
    """Colors owning a vertex of K that sees every other color inside K."""
    g, k = frame.graph, frame.k_vertices
    col = (coloring or frame.coloring).assignment
    need = frame.palette - 1
    out = set()
    for v in k:
        cv = col[v]
        if cv in out:
            continue
        seen = {col[u] for u in g.adjacency[v] if u in k}
        seen.discard(cv)
        if len(seen) == need:
            out.add(cv)
    return frozenset(out)


def non_dominant_k_colors(frame: Frame, exclude: Iterable[int] = ()) -> list[int]:
    """Ascending colors outside the dominant colors of K and ``exclude``."""
    dk = dominant_k_colors(frame)
    skip = set(exclude)
    return [c for c in range(1, frame.palette + 1) if c not in dk and c not in skip]


def frame_bad_edges(frame: Frame) -> list[tuple[int, int, int]]:
    """Monochromatic F-K edges as ``(f_vertex, k_vertex, color)``, sorted by
    color and then by endpoints."""
    g, col = frame.graph, frame.coloring.assignment
    out = []
    for v in frame.f_vertices:
        cv = col[v]
        if cv is None:
            raise InputError(f"F vertex {v} is uncolored")
        for u in g.adjacency[v]:
            if u in frame.k_vertices and col[u] == cv:
                out.append((v, u, cv))
    out.sort(key=lambda t: (t[2], t[0], t[1]))
    return out


def frame_bad_edge_count(frame: Frame) -> int:
    return len(frame_bad_edges(frame))


def k_neighbors(frame: Frame, v: int) -> list[int]:
    return [u for u in frame.graph.adjacency[v] if u in frame.k_vertices]


def movable(frame: Frame) -> list[int]:
    """F vertices that repair moves may recolor, ascending."""
    return sorted(frame.f_vertices - frame.frozen)


def analyze_bad_edge(frame: Frame, color_i: int) -> BadEdgeContext:
    bad = [t for t in frame_bad_edges(frame) if t[2] == color_i]
    if not bad:
        raise InputError(f"no {color_i}-bad edge between F and K")
    u, partner, _ = min(bad)
    col = frame.coloring.assignment
    u_colors = {col[w] for w in k_neighbors(frame, u)}
    pool = frame.f_vertices - {frame.active} - frame.anchors - frame.frozen
    a_set = frozenset(z for z in pool if col[z] not in u_colors)
    inner = frame.f_vertices - {frame.active}
    touching = {w for v in inner for w in frame.graph.adjacency[v] if w in frame.k_vertices}
    c_sets: dict[int, set[int]] = {c: set() for c in range(1, frame.palette + 1)}
    for w in touching:
        c_sets[col[w]].add(w)
    return BadEdgeContext(
        color_i,
        u,
        partner,
        a_set,
        frozenset(pool - a_set),
        {c: frozenset(s) for c, s in c_sets.items()},
    )


def color_active_neighborhood(
    frame: Frame,
    palette_constraints: Iterable[int],
    forbid: Mapping[int, Iterable[int]] | None = None,
) -> Frame:
    """Color the uncolored F vertices so that the active vertex sees every
    color in ``palette_constraints`` other than its own.

    Vertices are filled in ascending order with the smallest admissible color;
    the search backtracks only when the greedy choice dead-ends. Conflicts
    with K are allowed here and left to the repair loop; conflicts inside F
    are not.
    """
    g, col = frame.graph, frame.coloring
    allowed = sorted(set(palette_constraints))
    own = col[frame.active]
    if own is None:
        raise InputError("the active vertex must be colored before its neighbourhood")
    around = {col[u] for u in g.adjacency[frame.active] if col[u] is not None}
    needed = [c for c in allowed if c != own and c not in around]
    slots = sorted(v for v in frame.f_vertices if col[v] is None)
    if any(s not in g.neighbors(frame.active) for s in slots):
        raise InputError("only neighbours of the active vertex may be uncolored in F")
    if len(slots) < len(needed):
        raise InfeasibleError(
            f"{len(slots)} uncolored neighbours cannot carry {len(needed)} missing colors"
        )
    bans = {v: set(forbid.get(v, ())) for v in slots} if forbid else {v: set() for v in slots}
    extras = [c for c in allowed if c != own]
    assigned: dict[int, int] = {}

    def ok(v: int, c: int) -> bool:
        if c in bans[v]:
            return False
        for u in g.adjacency[v]:
            if u in frame.f_vertices and assigned.get(u, col[u]) == c:
                return False
        return True

    def rec(idx: int, left: list[int]) -> bool:
        if idx == len(slots):
            return not left
        v = slots[idx]
        spare = len(slots) - idx - len(left)
        options = list(left)
        if spare > 0:
            options += [c for c in extras if c not in left]
        for c in options:
            if not ok(v, c):
                continue
            assigned[v] = c
            if rec(idx + 1, [x for x in left if x != c]):
                return True
            del assigned[v]
        return False

    if not rec(0, needed):
        raise InfeasibleError("forbidden colors leave no admissible assignment of F")
    return frame.with_coloring(col.updated(assigned))
