"""Bad-edge removal by color switching, and the strict-descent repair loop."""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .frame import (
    BadEdgeContext,
    Frame,
    RepairMove,
    analyze_bad_edge,
    dominant_k_colors,
    frame_bad_edges,
    k_neighbors,
    movable,
)

F_LOCAL_KINDS = ("swap", "rotation3")
FULL_CATALOG = ("swap", "rotation3", "global_color_rotation", "demote_dominant")


class _Judge:
    """Decides whether a candidate recoloring is an admissible repair.

    A candidate is a mapping ``vertex -> new color``. It is admissible when
    it removes the target edge, creates no monochromatic edge that was not
    already there, keeps the active vertex seeing every other color, keeps
    anchor colors and protected colors out of the dominant colors of K, and
    keeps the guarded vertices dominant.
    """

    def __init__(self, frame: Frame, ctx: BadEdgeContext, protected: Iterable[int]):
        self.frame = frame
        self.g = frame.graph
        self.col = frame.coloring.assignment
        self.target = (ctx.u, ctx.k_partner)
        self.dk = dominant_k_colors(frame)
        self.protected = frozenset(c for c in protected if c not in self.dk)
        self.pal = frame.palette
        colored = [v for v in range(self.g.n) if self.col[v] is not None]
        if frame.keep_dominant is None:
            self.guard = frozenset(v for v in colored if self._sees_all(v, {}))
        else:
            self.guard = frozenset(v for v in frame.keep_dominant if self._sees_all(v, {}))

    def _c(self, v: int, changes: dict[int, int]) -> int | None:
        return changes.get(v, self.col[v])

    def _sees_all(self, v: int, changes: dict[int, int]) -> bool:
        own = self._c(v, changes)
        if own is None:
            return False
        seen = {self._c(u, changes) for u in self.g.adjacency[v]}
        seen.discard(None)
        seen.discard(own)
        return len(seen) == self.pal - 1

    def accepts(self, changes: dict[int, int], dk_after: frozenset[int] | None = None) -> bool:
        if not changes:
            return False
        c = self._c
        u, w = self.target
        if c(u, changes) == c(w, changes):
            return False
        active = self.frame.active
        if not self._sees_all(active, changes):
            return False
        for v in changes:
            cv = c(v, changes)
            for x in self.g.adjacency[v]:
                if c(x, changes) == cv:
                    # Allowed only if the edge was already bad and is not the target.
                    if self.col[x] != self.col[v] or {v, x} == {u, w}:
                        return False
        dk = self.dk if dk_after is None else dk_after
        for a in self.frame.anchors:
            if self.col[a] not in self.dk and c(a, changes) in dk:
                return False
        if dk_after is not None and self.protected & dk_after:
            return False
        touched = set(changes)
        for v in changes:
            touched.update(self.g.adjacency[v])
        for v in self.guard & touched:
            if not self._sees_all(v, changes):
                return False
        return True


def _switch(frame: Frame, verts: Sequence[int], perm: dict[int, int]) -> dict[int, int]:
    """Recolor ``verts`` by the color permutation ``perm`` (identity elsewhere)."""
    col = frame.coloring.assignment
    out = {}
    for v in verts:
        c = col[v]
        if c in perm and perm[c] != c:
            out[v] = perm[c]
    return out


def _recolor_record(frame: Frame, changes: dict[int, int]) -> tuple[tuple[int, int, int], ...]:
    col = frame.coloring.assignment
    return tuple((v, col[v], c) for v, c in sorted(changes.items()))


def _f_local_candidates(frame: Frame, ctx: BadEdgeContext, protected: Sequence[int]):
    """Single color switches in F, then 3-cycles and double switches.

    Yields lists of ``(kind, slots, changes)`` steps.
    """
    i = ctx.color_i
    col = frame.coloring.assignment
    verts = movable(frame)
    colors = range(1, frame.palette + 1)
    seen: set[tuple] = set()

    def emit(steps):
        # steps: [(kind, slots, perm)]; the perms touch disjoint colors.
        out = [(kind, slots, _switch(frame, verts, perm)) for kind, slots, perm in steps]
        merged = {v: c for _, _, ch in out for v, c in ch.items()}
        key = tuple(sorted(merged.items()))
        if not merged or key in seen:
            return None
        seen.add(key)
        return out

    def rank(z: int) -> tuple:
        clash = any(col[w] == i for w in k_neighbors(frame, z))
        return (clash, z)

    order: list[int] = [col[z] for z in sorted(ctx.a_set, key=rank)]
    order += [c for c in protected if c not in order]
    order += [c for c in colors if c not in order]
    for b in order:
        if b == i:
            continue
        hit = emit([("swap", {"colors": (i, b)}, {i: b, b: i})])
        if hit:
            yield hit

    # u takes c(z), z takes l, and the F vertex colored l takes i.
    preferred = []
    for z in sorted(ctx.a_set, key=rank):
        for v in sorted(ctx.b_set - {ctx.u}):
            preferred.append((i, col[z], col[v]))
    cycles = preferred + [t for t in permutations(colors, 3) if t[0] == min(t)]
    for a, b, c in cycles:
        if len({a, b, c}) < 3:
            continue
        hit = emit([("rotation3", {"cycle": (a, b, c)}, {a: b, b: c, c: a})])
        if hit:
            yield hit

    pairs = list(combinations(colors, 2))
    for p, q in combinations(pairs, 2):
        if set(p) & set(q):
            continue
        hit = emit(
            [
                ("swap", {"colors": p}, {p[0]: p[1], p[1]: p[0]}),
                ("swap", {"colors": q}, {q[0]: q[1], q[1]: q[0]}),
            ]
        )
        if hit:
            yield hit


def _single_switches(frame: Frame) -> Iterator[tuple[tuple[int, int], dict[int, int]]]:
    verts = movable(frame)
    yield (0, 0), {}
    for a, b in combinations(range(1, frame.palette + 1), 2):
        ch = _switch(frame, verts, {a: b, b: a})
        if ch:
            yield (a, b), ch


def try_remove_bad_edge(
    frame: Frame,
    ctx: BadEdgeContext,
    protected_colors: Iterable[int] = (),
    catalog: Sequence[str] = FULL_CATALOG,
) -> tuple[Frame, list[RepairMove]] | None:
    """Look for a recoloring that removes the bad edge of ``ctx``.

    The catalog is searched in a fixed order: single color switches inside
    F (preferring colors of ``ctx.a_set``, then protected colors), 3-cycles
    of colors inside F, pairs of disjoint switches, then moves that also
    permute three color classes of K, and finally demotion of a dominant K
    vertex followed by at most one switch in F. Returns the repaired frame
    and the applied moves, or ``None`` if nothing in the catalog works.
    """
    protected = sorted(set(protected_colors))
    judge = _Judge(frame, ctx, protected)

    def done(steps):
        merged = {v: c for _, _, ch in steps for v, c in ch.items()}
        applied = [
            RepairMove(kind, slots, _recolor_record(frame, ch)) for kind, slots, ch in steps
        ]
        return frame.with_coloring(frame.coloring.updated(merged)), applied

    if "swap" in catalog or "rotation3" in catalog:
        for steps in _f_local_candidates(frame, ctx, protected):
            if not all(kind in catalog for kind, _, _ in steps):
                continue
            if judge.accepts({v: c for _, _, ch in steps for v, c in ch.items()}):
                return done(steps)

    if "global_color_rotation" in catalog:
        hit = _try_k_rotations(frame, judge)
        if hit:
            return done(hit)

    if "demote_dominant" in catalog:
        hit = _try_demotions(frame, judge)
        if hit:
            return done(hit)
    return None


def _try_k_rotations(frame: Frame, judge: _Judge):
    # Permuting whole color classes of K keeps K proper and maps its dominant
    # colors along the permutation, so only F-K interactions need checking.
    col = frame.coloring.assignment
    kverts = sorted(frame.k_vertices)
    colors = range(1, frame.palette + 1)
    for a, b, c in permutations(colors, 3):
        if a != min(a, b, c):
            continue
        perm = {a: b, b: c, c: a}
        k_changes = {v: perm[col[v]] for v in kverts if col[v] in perm}
        if not k_changes:
            continue
        dk_after = frozenset(perm.get(x, x) for x in judge.dk)
        for pair, f_changes in _single_switches(frame):
            if judge.accepts({**k_changes, **f_changes}, dk_after):
                steps = [("global_color_rotation", {"cycle": (a, b, c)}, k_changes)]
                if f_changes:
                    steps.append(("swap", {"colors": pair}, f_changes))
                return steps
    return None


def _try_demotions(frame: Frame, judge: _Judge):
    g, col = frame.graph, frame.coloring.assignment
    kset = frame.k_vertices
    anchor_colors = {col[a] for a in frame.anchors}
    spare = [
        c for c in range(1, frame.palette + 1) if c not in judge.dk and c not in anchor_colors
    ]
    for xr in sorted(kset):
        r = col[xr]
        if r not in judge.dk:
            continue
        around = {col[u]: u for u in g.adjacency[xr] if u in kset}
        if len(around) < frame.palette - 1:
            continue
        for theta in spare:
            w = around.get(theta)
            if w is None:
                continue
            base = {xr: theta, w: r}
            trial = frame.coloring.updated(base)
            if any(trial[x] == r for x in g.adjacency[w] if x in kset and x != xr):
                continue
            dk_after = dominant_k_colors(frame, trial)
            for pair, f_changes in _single_switches(frame):
                if judge.accepts({**base, **f_changes}, dk_after):
                    steps = [("demote_dominant", {"vertex": xr, "theta": theta}, base)]
                    if f_changes:
                        steps.append(("swap", {"colors": pair}, f_changes))
                    return steps
    return None


def repair_to_proper(
    frame: Frame,
    protected_colors: Iterable[int] = (),
    max_rounds: int | None = None,
    *,
    catalog: Sequence[str] = FULL_CATALOG,
    history: list[int] | None = None,
    trace: list[RepairMove] | None = None,
) -> Frame | None:
    """Remove F-K bad edges one at a time until none is left.

    Each round takes the bad edge of lowest color (then lowest endpoints) and
    applies :func:`try_remove_bad_edge`. Every accepted move strictly lowers
    the bad-edge count. Returns the clean frame, or ``None`` if some bad edge
    resists the catalog or ``max_rounds`` runs out. ``history`` receives the
    bad-edge count before each round and ``trace`` the applied moves.
    """
    protected = tuple(protected_colors)
    if max_rounds is None:
        degree = len(frame.graph.adjacency[frame.active])
        max_rounds = max(1, degree * len(frame.f_vertices))
    for _ in range(max_rounds + 1):
        bad = frame_bad_edges(frame)
        if history is not None:
            history.append(len(bad))
        if not bad:
            return frame
        ctx = analyze_bad_edge(frame, bad[0][2])
        hit = try_remove_bad_edge(frame, ctx, protected, catalog)
        if hit is None:
            return None
        new_frame, moves = hit
        if len(frame_bad_edges(new_frame)) >= len(bad):
            raise AssertionError("repair move failed to lower the bad-edge count")
        if trace is not None:
            trace.extend(moves)
        frame = new_frame
    return None
