"""Shared fixtures: synthetic frames, an exhaustive F-local move oracle, and
seeded graph corpora."""

from __future__ import annotations

import random
from itertools import combinations

from bchromatic.coloring import Coloring
from bchromatic.constructive.frame import Frame, color_active_neighborhood
from bchromatic.errors import InfeasibleError
from bchromatic.generators import random_regular
from bchromatic.graph import Graph


def random_frame(rng: random.Random, d: int, k_extra: int | None = None) -> Frame:
    """A star around an active vertex 0 whose neighbour 1 is the colored
    center (color d+1) and whose other neighbours 2..d are fresh, attached to
    a properly colored pool K of random size."""
    palette = d + 1
    while True:
        pool = k_extra if k_extra is not None else rng.randint(d, 3 * d)
        n = d + 1 + pool
        kverts = [1] + list(range(d + 1, n))
        colors: list[int | None] = [None] * n
        colors[1] = palette
        for v in kverts[1:]:
            colors[v] = rng.randint(1, palette)
        edges = {(0, v) for v in range(1, d + 1)}
        for a, b in combinations(kverts, 2):
            if colors[a] != colors[b] and rng.random() < 0.15:
                edges.add((a, b))
        fresh = list(range(2, d + 1))
        for v in fresh:
            for w in rng.sample(kverts[1:], rng.randint(0, min(d - 1, pool))):
                edges.add((v, w))
        for a, b in combinations(fresh, 2):
            if rng.random() < 0.05:
                edges.add((a, b))
        colors[0] = rng.randint(1, d)
        g = Graph.from_edges(n, sorted(edges))
        style = rng.random()
        frozen = frozenset({0}) if style < 0.5 else frozenset()
        anchors = frozenset() if style < 0.5 else frozenset({0})
        keep = None if rng.random() < 0.5 else frozenset()
        frame = Frame(
            g,
            frozenset(kverts),
            0,
            frozenset([0] + fresh),
            Coloring(tuple(colors), palette),
            frozen,
            anchors,
            keep,
        )
        try:
            return color_active_neighborhood(frame, range(1, d + 1))
        except InfeasibleError:
            continue


def _mono_edges(g: Graph, colors) -> set[tuple[int, int]]:
    return {(u, v) for u, v in g.edges() if colors[u] is not None and colors[u] == colors[v]}


def _sees_all(g: Graph, colors, palette: int, v: int) -> bool:
    if colors[v] is None:
        return False
    seen = {colors[u] for u in g.adjacency[v] if colors[u] is not None}
    seen.discard(colors[v])
    return len(seen) == palette - 1


def _k_dominant_colors(frame: Frame, colors) -> set[int]:
    g, k = frame.graph, frame.k_vertices
    out = set()
    for v in k:
        seen = {colors[u] for u in g.adjacency[v] if u in k}
        seen.discard(colors[v])
        if len(seen) == frame.palette - 1:
            out.add(colors[v])
    return out


def admissible(frame: Frame, target: tuple[int, int], after) -> bool:
    """Independent statement of what a repair may do: remove ``target``,
    add no monochromatic edge, keep the active vertex seeing every other
    color, keep non-dominant anchor colors out of the dominant colors of K,
    and keep guarded dominant vertices dominant."""
    g, before, pal = frame.graph, frame.coloring.assignment, frame.palette
    u, w = target
    if after[u] == after[w]:
        return False
    if not _mono_edges(g, after) <= _mono_edges(g, before) - {tuple(sorted(target))}:
        return False
    if not _sees_all(g, after, pal, frame.active):
        return False
    dk_before = _k_dominant_colors(frame, before)
    dk_after = _k_dominant_colors(frame, after)
    for a in frame.anchors:
        if before[a] not in dk_before and after[a] in dk_after:
            return False
    guard = range(g.n) if frame.keep_dominant is None else frame.keep_dominant
    for v in guard:
        if _sees_all(g, before, pal, v) and not _sees_all(g, after, pal, v):
            return False
    return True


def exhaustive_f_local(frame: Frame, target: tuple[int, int]) -> bool:
    """Is there a sequence of at most two color switches on the movable F
    vertices that is admissible for ``target``?"""
    movable = sorted(frame.f_vertices - frame.frozen)
    start = list(frame.coloring.assignment)
    pairs = list(combinations(range(1, frame.palette + 1), 2))

    def switch(colors, a, b):
        out = list(colors)
        for v in movable:
            if out[v] == a:
                out[v] = b
            elif out[v] == b:
                out[v] = a
        return out

    for a, b in pairs:
        one = switch(start, a, b)
        if one != start and admissible(frame, target, one):
            return True
        for c, e in pairs:
            two = switch(one, c, e)
            if two != start and admissible(frame, target, two):
                return True
    return False


def oracle_corpus(count: int = 200, seed: int = 2024) -> list[Graph]:
    """Seeded small graphs (n <= 8): random regular ones and G(n, p) ones."""
    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < count:
        n = rng.randint(3, 8)
        if len(out) % 2 == 0:
            d = rng.randint(1, n - 1)
            if (n * d) % 2:
                continue
            out.append(random_regular(n, d, rng.randrange(2**32)))
        else:
            p = rng.choice([0.3, 0.5, 0.7])
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
            out.append(Graph.from_edges(n, edges))
    return out
