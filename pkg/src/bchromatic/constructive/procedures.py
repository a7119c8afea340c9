"""Theorem-level orchestrations: center selection, frame loops, completion."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from .. import graph as gc
from ..coloring import (
    Coloring,
    dominance_profile,
    is_b_coloring,
    is_proper,
    partial_dominance_profile,
    sees_all_colors,
)
from ..errors import InfeasibleError, InputError
from ..graph import Graph
from .frame import Frame, color_active_neighborhood
from .repair import FULL_CATALOG, RepairMove, repair_to_proper

Outcome = Literal["success", "hypothesis_failed", "repair_exhausted", "budget_exhausted"]


@dataclass(frozen=True)
class ProcedureReport:
    procedure: str
    hypothesis_checks: tuple[tuple[str, bool], ...]
    outcome: Outcome
    final_coloring: Coloring | None
    dominant_colors_achieved: int
    move_trace: tuple[RepairMove, ...] = ()
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def hypotheses_hold(self) -> bool:
        return all(ok for _, ok in self.hypothesis_checks)

    def to_dict(self) -> dict:
        col = self.final_coloring
        return {
            "procedure": self.procedure,
            "hypothesis_checks": [[name, ok] for name, ok in self.hypothesis_checks],
            "outcome": self.outcome,
            "final_coloring": None
            if col is None
            else {"palette": col.palette, "assignment": list(col.assignment)},
            "dominant_colors_achieved": self.dominant_colors_achieved,
            "move_trace": [m.to_dict() for m in self.move_trace],
            "diagnostics": self.diagnostics,
        }


def half(d: int) -> int:
    """ceil((d - 1) / 2) for a non-negative integer d."""
    return d // 2


def complete_greedy(g: Graph, col: Coloring) -> Coloring:
    """Give every uncolored vertex, ascending, the smallest color absent
    from its colored neighbourhood."""
    colors = list(col.assignment)
    for v in range(g.n):
        if colors[v] is not None:
            continue
        around = {colors[u] for u in g.adjacency[v]}
        for c in range(1, col.palette + 1):
            if c not in around:
                colors[v] = c
                break
        else:
            raise InfeasibleError(f"no free color for vertex {v}; palette too small")
    return Coloring(tuple(colors), col.palette)


def _make_dominant(
    g: Graph,
    col: Coloring,
    v: int,
    movable: Sequence[int],
    guard: Iterable[int] = (),
) -> Coloring | None:
    """Recolor (or color) neighbours of ``v`` from ``movable`` so that ``v``
    sees every other color, keeping the coloring proper and every vertex of
    ``guard`` seeing all colors. Backtracking; ``None`` if impossible."""
    own = col[v]
    if own is None:
        raise InputError(f"vertex {v} must be colored first")
    nbrs = set(g.adjacency[v])
    movable = [u for u in sorted(set(movable)) if u in nbrs]
    fixed = {col[u] for u in nbrs if u not in movable and col[u] is not None}
    need = set(range(1, col.palette + 1)) - {own} - fixed
    guard = sorted(set(guard))
    assigned: dict[int, int] = {}

    def free(u: int, c: int) -> bool:
        if c == own:
            return False
        return all(assigned.get(w, col[w]) != c for w in g.adjacency[u])

    def rec(idx: int, missing: frozenset[int]) -> bool:
        if len(missing) > len(movable) - idx:
            return False
        if idx == len(movable):
            trial = col.updated(assigned)
            return all(sees_all_colors(g, trial, w) for w in guard)
        u = movable[idx]
        options = sorted(missing)
        if col[u] is not None and col[u] not in options:
            options.append(col[u])
        elif col[u] is not None:
            options.remove(col[u])
            options.insert(0, col[u])
        for c in options:
            if not free(u, c):
                continue
            assigned[u] = c
            if rec(idx + 1, missing - {c}):
                return True
            del assigned[u]
        if col[u] is None and len(missing) <= len(movable) - idx - 1:
            # An uncolored vertex may stay uncolored for now.
            return rec(idx + 1, missing)
        return False

    if not rec(0, frozenset(need)):
        return None
    return col.updated(assigned)


def _run_frame(
    g: Graph,
    col: Coloring,
    active: int,
    palette_colors: Iterable[int],
    *,
    freeze_active: bool,
    extra_f: Iterable[int] = (),
    frozen_extra: Iterable[int] = (),
    anchors: Iterable[int] = (),
    keep: Iterable[int] | None = None,
    protected: Iterable[int] = (),
    forbid: dict[int, Iterable[int]] | None = None,
    catalog: Sequence[str] = FULL_CATALOG,
    trace: list[RepairMove],
    diag: dict,
) -> Coloring | None:
    """Color the uncolored neighbours of ``active`` and repair the frame."""
    fresh = {u for u in g.adjacency[active] if col[u] is None}
    f_vertices = frozenset({active} | fresh | set(extra_f))
    k_vertices = frozenset(v for v in col.colored() if v not in f_vertices)
    frozen = set(frozen_extra)
    if freeze_active:
        frozen.add(active)
    frame = Frame(
        g,
        k_vertices,
        active,
        f_vertices,
        col,
        frozenset(frozen),
        frozenset(anchors),
        None if keep is None else frozenset(keep),
    )
    try:
        frame = color_active_neighborhood(frame, palette_colors, forbid)
    except InfeasibleError as exc:
        diag.setdefault("failures", []).append({"active": active, "reason": str(exc)})
        return None
    history: list[int] = []
    moves: list[RepairMove] = []
    fixed = repair_to_proper(frame, protected, catalog=catalog, history=history, trace=moves)
    diag.setdefault("frames", []).append({"active": active, "bad_edge_counts": history})
    if fixed is None:
        diag.setdefault("failures", []).append(
            {"active": active, "reason": "unremovable bad edge", "bad_edge_counts": history}
        )
        return None
    trace.extend(moves)
    return fixed.coloring


def _star(g: Graph, x: int, order: Sequence[int], d: int) -> Coloring:
    col = Coloring.empty(g.n, d + 1).updated({x: d + 1})
    return col.updated({v: i for i, v in enumerate(order, start=1)})


def _ux_core(
    g: Graph,
    x: int,
    u_list: Sequence[int],
    d: int,
    col: Coloring | None,
    trace: list[RepairMove],
    diag: dict,
) -> Coloring | None:
    """Frames around each u in ``u_list`` on top of the star coloring at x,
    then make x dominant again. Returns the partial coloring or ``None``."""
    if col is None:
        col = _star(g, x, sorted(g.adjacency[x]), d)
    palette = range(1, col.palette + 1)
    done: list[int] = []
    for u in u_list:
        nxt = None
        # The active may move (it stays out of the dominant colors of K);
        # if that fails, retry with its color pinned.
        for pinned in (False, True):
            nxt = _run_frame(
                g,
                col,
                u,
                palette,
                freeze_active=pinned,
                anchors=() if pinned else (u,),
                keep=done,
                trace=trace,
                diag=diag,
            )
            if nxt is not None and len({nxt[w] for w in done + [u]}) == len(done) + 1:
                break
            nxt = None
        if nxt is None:
            diag["failed_at"] = u
            return None
        col = nxt
        done.append(u)
    tail = [v for v in g.adjacency[x] if v not in set(u_list)]
    fixed = _make_dominant(g, col, x, tail, guard=done)
    if fixed is None:
        diag["failed_at"] = x
        return None
    return fixed


def _regular_checks(g: Graph) -> tuple[int | None, list[tuple[str, bool]]]:
    d = gc.is_regular(g)
    return d, [("regular", d is not None), ("connected", gc.is_connected(g))]


def _report(
    procedure: str,
    checks: list[tuple[str, bool]],
    g: Graph,
    col: Coloring | None,
    trace: list[RepairMove],
    diag: dict,
    *,
    success: bool,
    outcome: Outcome | None = None,
) -> ProcedureReport:
    achieved = 0
    if col is not None and is_proper(g, col):
        profile = dominance_profile(g, col) if col.is_total() else partial_dominance_profile(g, col)
        achieved = len(profile.dominant_colors)
    if outcome is None:
        outcome = "success" if success else "repair_exhausted"
    return ProcedureReport(
        procedure,
        tuple(checks),
        outcome,
        col,
        achieved,
        tuple(trace),
        diag,
    )


def ux_coloring(g: Graph, x: int, u_set: Iterable[int]) -> ProcedureReport:
    """Color around x so that x and every vertex of ``u_set`` (neighbours of
    x) are dominant with pairwise distinct colors."""
    u_list = sorted(set(u_set))
    d, checks = _regular_checks(g)
    diag: dict = {"x": x, "u_set": u_list}
    if d is None:
        return _report("ux", checks, g, None, [], diag, success=False, outcome="hypothesis_failed")
    if not 0 <= x < g.n:
        raise InputError(f"vertex {x} out of range")
    inside = set(u_list) <= set(g.adjacency[x])
    size_ok = len(u_list) == half(d) + 1
    checks += [
        ("u_set_in_neighbourhood", inside),
        ("u_set_size", size_ok),
        ("girth_5", gc.girth(g) == 5),
    ]
    if not (inside and size_ok):
        return _report("ux", checks, g, None, [], diag, success=False, outcome="hypothesis_failed")
    trace: list[RepairMove] = []
    col = _ux_core(g, x, u_list, d, None, trace, diag)
    ok = col is not None and _ux_holds(g, col, x, u_list)
    return _report("ux", checks, g, col, trace, diag, success=ok)


def _ux_holds(g: Graph, col: Coloring, x: int, u_list: Sequence[int]) -> bool:
    if not is_proper(g, col):
        return False
    prof = partial_dominance_profile(g, col)
    need = set(u_list) | {x}
    return need <= prof.dominant_vertices and len({col[v] for v in need}) == len(need)


def _max_eccentricity_center(g: Graph) -> int:
    ecc = [gc.eccentricity(g, v) for v in range(g.n)]
    return ecc.index(max(ecc))


def _full_frame_loop(
    procedure: str,
    g: Graph,
    x: int,
    d: int,
    checks: list[tuple[str, bool]],
    catalog: Sequence[str],
) -> ProcedureReport:
    trace: list[RepairMove] = []
    diag: dict = {"center": x}
    order = sorted(g.adjacency[x])
    col = _star(g, x, order, d)
    palette = range(1, d + 1)
    for v in order:
        nxt = _run_frame(
            g, col, v, palette, freeze_active=True, catalog=catalog, trace=trace, diag=diag
        )
        if nxt is None:
            diag["failed_at"] = v
            return _report(procedure, checks, g, col, trace, diag, success=False)
        col = nxt
    col = complete_greedy(g, col)
    ok = is_proper(g, col) and is_b_coloring(g, col, d + 1)
    return _report(procedure, checks, g, col, trace, diag, success=ok)


def theorem_2_1_procedure(g: Graph, center: int | None = None) -> ProcedureReport:
    """Aim for a b-coloring with d+1 colors on a C4- and C6-free graph."""
    d, checks = _regular_checks(g)
    if d is None or not checks[1][1]:
        return _report("thm21", checks, g, None, [], {}, success=False, outcome="hypothesis_failed")
    checks += [
        ("degree_ge_7", d >= 7),
        ("no_c4", not gc.has_cycle_of_length(g, 4)),
        ("no_c6", not gc.has_cycle_of_length(g, 6)),
    ]
    x = _max_eccentricity_center(g) if center is None else center
    return _full_frame_loop("thm21", g, x, d, checks, FULL_CATALOG)


def check_thm22_conditions(g: Graph, x: int) -> tuple[bool, bool]:
    """Interaction conditions between the neighbourhoods of the x_i.

    With ``W_i`` the union of ``N(x_j) - {x}`` over j != i: condition 1 says
    at most ceil((d-1)/2) - 1 neighbours v of x_i (other than x) meet W_i;
    condition 2 says each such v has at most ceil((d-1)/2) - 1 neighbours in W_i.
    """
    d = gc.degree(g, x)
    cap = half(d) - 1
    xs = sorted(g.adjacency[x])
    cond1 = cond2 = True
    for xi in xs:
        w_i = set()
        for xj in xs:
            if xj != xi:
                w_i.update(g.adjacency[xj])
        w_i.discard(x)
        touching = 0
        for v in g.adjacency[xi]:
            if v == x:
                continue
            hits = len(g.neighbors(v) & w_i)
            if hits:
                touching += 1
                if hits > cap:
                    cond2 = False
        if touching > cap:
            cond1 = False
    return cond1, cond2


def theorem_2_2_procedure(g: Graph, x: int | None = None) -> ProcedureReport:
    """Frame loop with plain pair switches at a center meeting both
    interaction conditions (the lowest such vertex unless ``x`` is given)."""
    d, checks = _regular_checks(g)
    if d is None or not checks[1][1]:
        return _report("thm22", checks, g, None, [], {}, success=False, outcome="hypothesis_failed")
    checks += [("degree_ge_7", d >= 7), ("no_c4", not gc.has_cycle_of_length(g, 4))]
    if x is None:
        x = next((v for v in range(g.n) if all(check_thm22_conditions(g, v))), 0)
    c1, c2 = check_thm22_conditions(g, x)
    checks += [("condition_1", c1), ("condition_2", c2)]
    return _full_frame_loop("thm22", g, x, d, checks, ("swap",))


def _head_order(g: Graph, x: int, m: int) -> list[int] | None:
    """Order N(x) so that among the first m at most one (placed first) has a
    neighbour among the rest. ``None`` if the edges inside N(x) are not a
    matching."""
    nx = sorted(g.adjacency[x])
    inside = set(nx)
    partner: dict[int, int] = {}
    for v in nx:
        mates = [u for u in g.adjacency[v] if u in inside]
        if len(mates) > 1:
            return None
        if mates:
            partner[v] = mates[0]
    single = [v for v in nx if v not in partner]
    pairs = sorted({tuple(sorted((v, partner[v]))) for v in partner})
    heads: list[int] = []
    for v in single:
        if len(heads) < m:
            heads.append(v)
    for a, b in pairs:
        if len(heads) + 2 <= m:
            heads += [a, b]
    split = None
    if len(heads) < m:
        for a, b in pairs:
            if a not in heads:
                split = a
                break
        heads.insert(0, split)
    tail = [v for v in nx if v not in heads]
    return heads + tail


def theorem_2_3_procedure(g: Graph, center: int | None = None) -> ProcedureReport:
    """Aim for ceil((d-1)/2) + 2 dominant colors in a (d+1)-coloring of a
    C4-free d-regular graph."""
    d, checks = _regular_checks(g)
    if d is None:
        return _report("thm23", checks, g, None, [], {}, success=False, outcome="hypothesis_failed")
    checks += [("degree_ge_7", d >= 7), ("no_c4", not gc.has_cycle_of_length(g, 4))]
    m = half(d) + 1
    diag: dict = {"target": m + 1}
    candidates = range(g.n) if center is None else [center]
    order = None
    for x in candidates:
        order = _head_order(g, x, m)
        if order is not None:
            break
    if order is None:
        diag["reason"] = "edges inside N(x) do not form a matching"
        return _report("thm23", checks, g, None, [], diag, success=False, outcome="hypothesis_failed")
    diag["center"] = x
    diag["order"] = order
    heads = order[:m]
    trace: list[RepairMove] = []
    col = _star(g, x, order, d)
    col = _ux_core(g, x, heads, d, col, trace, diag)
    if col is None:
        return _report("thm23", checks, g, None, trace, diag, success=False)
    col = complete_greedy(g, col)
    rep = _report("thm23", checks, g, col, trace, diag, success=True)
    if rep.dominant_colors_achieved < m + 1:
        return _report("thm23", checks, g, col, trace, diag, success=False)
    return rep


def _distance_five_pair(g: Graph) -> tuple[int, int] | None:
    for x in range(g.n):
        dist = gc.bfs_distances(g, x, 5)
        for y in range(x + 1, g.n):
            if dist[y] == 5:
                return x, y
    return None


def _closed_colored_dominant(g: Graph, col: Coloring) -> frozenset[int]:
    return partial_dominance_profile(g, col).dominant_colors


def _finish(
    g: Graph,
    col: Coloring,
    centers: Sequence[int],
    guard: Iterable[int],
) -> Coloring | None:
    """Color each center (if needed) and its uncolored neighbours so it is
    dominant, keeping ``guard`` dominant; then complete greedily."""
    guard = set(guard)
    for c in centers:
        if col[c] is None:
            taken = set(_closed_colored_dominant(g, col))
            taken |= {col[u] for u in g.adjacency[c] if col[u] is not None}
            spare = [k for k in range(1, col.palette + 1) if k not in taken]
            if not spare:
                return None
            col = col.updated({c: spare[0]})
        movable = [u for u in g.adjacency[c] if col[u] is None]
        col = _make_dominant(g, col, c, movable, guard)
        if col is None:
            return None
        guard.add(c)
    return complete_greedy(g, col)


def theorem_3_1_procedure(g: Graph) -> ProcedureReport:
    """Aim for ceil((d-1)/2) + 4 dominant colors on a girth-5 graph with two
    vertices at distance 5, in three phases."""
    d, checks = _regular_checks(g)
    if d is None:
        return _report("thm31", checks, g, None, [], {}, success=False, outcome="hypothesis_failed")
    pair = _distance_five_pair(g)
    checks += [
        ("degree_ge_7", d >= 7),
        ("girth_5", gc.girth(g) == 5),
        ("diameter_5", gc.diameter(g) == 5),
        ("distance_5_pair", pair is not None),
    ]
    if pair is None:
        return _report("thm31", checks, g, None, [], {}, success=False, outcome="hypothesis_failed")
    x, y = pair
    m = half(d) + 1
    target = m + 3
    trace: list[RepairMove] = []
    diag: dict = {"x": x, "y": y, "target": target}
    nx, ny = sorted(g.adjacency[x]), sorted(g.adjacency[y])
    palette = range(1, d + 2)

    def done(col: Coloring | None, phase: str) -> ProcedureReport | None:
        if col is None or not is_proper(g, col):
            return None
        if len(dominance_profile(g, col).dominant_colors) < target:
            return None
        diag["phase"] = phase
        return _report("thm31", checks, g, col, trace, diag, success=True)

    # Phase 1: U_x-coloring, then one y_j frame that repairs fully.
    u_list = nx[:m]
    base = _ux_core(g, x, u_list, d, None, trace, diag.setdefault("phase1", {}))
    if base is None:
        return _report("thm31", checks, g, None, trace, diag, success=False)
    kset = set(base.colored())
    dk = _closed_colored_dominant(g, base)
    nk = [c for c in palette if c not in dk]
    p = None
    if len(nk) >= 2:
        alpha, beta = nk[0], nk[1]
        diag["alpha_beta"] = [alpha, beta]
        start = base.updated({y: beta})
        for yj in ny:
            others = [v for v in g.adjacency[yj] if v != y]
            light = [v for v in others if sum(w in kset for w in g.adjacency[v]) <= half(d)]
            if not light:
                if p is None:
                    p = yj
                continue
            col = _run_frame(
                g,
                start.updated({yj: alpha}),
                yj,
                palette,
                freeze_active=True,
                extra_f=(y,),
                frozen_extra=(y,),
                protected=(alpha, beta),
                forbid={light[0]: dk},
                trace=trace,
                diag=diag["phase1"],
            )
            if col is None:
                continue
            rep = done(_finish(g, col, [y, x], u_list + [yj]), "1")
            if rep:
                return rep
    if p is None:
        p = ny[0]
    diag["p"] = p

    # Phase 2: V_x-coloring with |V & U| = 2 (d even) or 1 (d odd).
    keep_u = 2 if d % 2 == 0 else 1
    v_list = sorted(u_list[:keep_u] + [v for v in nx if v not in u_list][: m - keep_u])
    base = _ux_core(g, x, v_list, d, None, trace, diag.setdefault("phase2", {}))
    if base is not None:
        dk = _closed_colored_dominant(g, base)
        free = [c for c in palette if c not in dk and c != base[x]]
        if len(free) >= 2:
            alpha, beta = free[0], free[1]
            col = _run_frame(
                g,
                base.updated({y: beta, p: alpha}),
                p,
                palette,
                freeze_active=True,
                extra_f=(y,),
                frozen_extra=(y,),
                protected=(alpha, beta),
                trace=trace,
                diag=diag["phase2"],
            )
            if col is not None:
                rep = done(_finish(g, col, [y, x], v_list + [p]), "2")
                if rep:
                    return rep

    # Phase 3: U'_y-coloring away from y_p, then x is colored last.
    u2 = [v for v in ny if v != p][:m]
    base = _ux_core(g, y, u2, d, None, trace, diag.setdefault("phase3", {}))
    if base is not None:
        taken = {base[v] for v in u2 + [y]}
        alpha = next(c for c in palette if c not in taken)
        col = _run_frame(
            g,
            base.updated({p: alpha}),
            p,
            palette,
            freeze_active=True,
            extra_f=(y,),
            frozen_extra=(y,),
            keep=u2 + [y],
            trace=trace,
            diag=diag["phase3"],
        )
        if col is not None:
            rep = done(_finish(g, col, [x], u2 + [y, p]), "3")
            if rep:
                return rep
    return _report("thm31", checks, g, None, trace, diag, success=False)
