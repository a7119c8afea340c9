"""Partial and total vertex colorings, dominance, and b-coloring checks.

Colors are integers ``1..palette``; an unassigned vertex holds ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InputError
from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    assignment: tuple[int | None, ...]
    palette: int

    def __post_init__(self):
        if self.palette < 1:
            raise InputError("palette must be at least 1")
        for v, c in enumerate(self.assignment):
            if c is not None and not 1 <= c <= self.palette:
                raise InputError(f"color {c} of vertex {v} outside [1, {self.palette}]")

    @classmethod
    def empty(cls, n: int, palette: int) -> Coloring:
        return cls((None,) * n, palette)

    @classmethod
    def from_list(cls, colors: Iterable[int | None], palette: int | None = None) -> Coloring:
        colors = tuple(colors)
        if palette is None:
            palette = max((c for c in colors if c is not None), default=1)
        return cls(colors, palette)

    def __getitem__(self, v: int) -> int | None:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)

    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def colored(self) -> list[int]:
        return [v for v, c in enumerate(self.assignment) if c is not None]

    def updated(self, changes: Mapping[int, int | None]) -> Coloring:
        colors = list(self.assignment)
        for v, c in changes.items():
            colors[v] = c
        return Coloring(tuple(colors), self.palette)

    def classes(self) -> dict[int, list[int]]:
        """Vertices of each used color, keyed by color."""
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.assignment):
            if c is not None:
                out.setdefault(c, []).append(v)
        return out

    def used_colors(self) -> set[int]:
        return {c for c in self.assignment if c is not None}


@dataclass(frozen=True)
class DominanceProfile:
    dominant_vertices: frozenset[int]
    dominant_colors: frozenset[int]
    per_color_witness: dict[int, int | None] = field(compare=False)


def _check_size(g: Graph, col: Coloring) -> None:
    if len(col) != g.n:
        raise InputError(f"coloring has {len(col)} entries for a graph on {g.n} vertices")


def is_proper(g: Graph, col: Coloring) -> bool:
    _check_size(g, col)
    a = col.assignment
    return all(a[u] is None or a[u] != a[v] for u, v in g.edges())


def bad_edges(g: Graph, col: Coloring) -> list[tuple[int, int, int]]:
    """Monochromatic edges as ``(u, v, color)`` with ``u < v``, sorted."""
    _check_size(g, col)
    a = col.assignment
    return [(u, v, a[u]) for u, v in g.edges() if a[u] is not None and a[u] == a[v]]


def is_dominant_vertex(g: Graph, col: Coloring, v: int) -> bool:
    """Whether ``v`` sees every palette color other than its own."""
    _check_size(g, col)
    own = col[v]
    if own is None:
        raise InputError(f"vertex {v} is unassigned")
    seen = set()
    for u in g.neighbors(v):
        cu = col[u]
        if cu is None:
            raise InputError(f"neighbour {u} of {v} is unassigned")
        seen.add(cu)
    seen.discard(own)
    return len(seen) == col.palette - 1


def sees_all_colors(g: Graph, col: Coloring, v: int) -> bool:
    """Dominance of ``v`` judged on its currently colored neighbours only."""
    own = col[v]
    if own is None:
        return False
    seen = {col[u] for u in g.adjacency[v]}
    seen.discard(None)
    seen.discard(own)
    return len(seen) == col.palette - 1


def _profile(g: Graph, col: Coloring, vertices: Iterable[int]) -> DominanceProfile:
    dominant = [v for v in vertices if is_dominant_vertex(g, col, v)]
    witness: dict[int, int | None] = {c: None for c in range(1, col.palette + 1)}
    for v in sorted(dominant):
        c = col[v]
        if witness[c] is None:
            witness[c] = v
    return DominanceProfile(
        frozenset(dominant), frozenset(col[v] for v in dominant), witness
    )


def dominance_profile(g: Graph, col: Coloring) -> DominanceProfile:
    _check_size(g, col)
    if not col.is_total():
        raise InputError("dominance_profile needs a total coloring")
    return _profile(g, col, range(g.n))


def partial_dominance_profile(g: Graph, col: Coloring) -> DominanceProfile:
    """Dominance restricted to vertices whose closed neighbourhood is colored."""
    _check_size(g, col)
    ready = [
        v
        for v in range(g.n)
        if col[v] is not None and all(col[u] is not None for u in g.adjacency[v])
    ]
    return _profile(g, col, ready)


def is_b_coloring(g: Graph, col: Coloring, k: int) -> bool:
    if col.palette != k:
        raise InputError(f"coloring palette {col.palette} differs from k={k}")
    if not col.is_total():
        raise InputError("is_b_coloring needs a total coloring")
    unused = set(range(1, k + 1)) - col.used_colors()
    if unused:
        raise InputError(f"colors {sorted(unused)} are unused; compact the palette first")
    if not is_proper(g, col):
        return False
    return len(dominance_profile(g, col).dominant_colors) == k


def compact(col: Coloring) -> tuple[Coloring, dict[int, int]]:
    """Renumber used colors onto ``1..k`` preserving their order.

    Returns the new coloring and the old-to-new color map.
    """
    mapping = {c: i for i, c in enumerate(sorted(col.used_colors()), start=1)}
    return (
        Coloring(
            tuple(None if c is None else mapping[c] for c in col.assignment),
            max(len(mapping), 1),
        ),
        mapping,
    )


@dataclass(frozen=True)
class CollapseResult:
    coloring: Coloring
    k: int
    renamings: tuple[dict[int, int], ...] = ()

    def __iter__(self):
        # Unpacks as ``(coloring, k)``.
        return iter((self.coloring, self.k))


def collapse_non_dominant(g: Graph, col: Coloring) -> CollapseResult:
    """Eliminate dominant-free color classes one at a time.

    The smallest color without a dominant vertex is removed: each of its
    vertices, in ascending order, takes the smallest color missing from its
    neighbourhood. Colors are then renumbered to stay contiguous. The loop
    stops when every remaining class has a dominant vertex, which makes the
    result a b-coloring.
    """
    _check_size(g, col)
    if not col.is_total():
        raise InputError("collapse_non_dominant needs a total coloring")
    if not is_proper(g, col):
        raise InputError("collapse_non_dominant needs a proper coloring")
    current, first = compact(col)
    renamings = [first] if any(k != v for k, v in first.items()) else []
    while True:
        dominant = dominance_profile(g, current).dominant_colors
        missing = [c for c in range(1, current.palette + 1) if c not in dominant]
        if not missing:
            return CollapseResult(current, current.palette, tuple(renamings))
        victim = missing[0]
        colors = list(current.assignment)
        for v in range(g.n):
            if colors[v] != victim:
                continue
            around = {colors[u] for u in g.adjacency[v]}
            colors[v] = next(
                c for c in range(1, current.palette + 1) if c != victim and c not in around
            )
        current, mapping = compact(Coloring(tuple(colors), current.palette))
        renamings.append(mapping)


def dominant_color_count(g: Graph, col: Coloring) -> int:
    return len(dominance_profile(g, col).dominant_colors)
