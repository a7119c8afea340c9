"""Exact solvers for the chromatic number, b-chromatic number and the
dominant-color maximum of (d+1)-colorings, plus brute-force oracles.

All searches are deterministic depth-first searches that count nodes against a
:class:`SearchBudget`; running out of budget gives an ``inconclusive`` result.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from . import graph as gc
from .coloring import Coloring, dominance_profile, is_b_coloring, is_proper
from .errors import InputError
from .graph import Graph

ORACLE_MAX_N = 10


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 10_000_000
    time_limit_ms: int = 60_000

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit_ms <= 0:
            raise InputError("budget limits must be positive")


@dataclass(frozen=True)
class ExactResult:
    value: int | None
    status: Literal["exact", "inconclusive"]
    certificate: Coloring | None
    nodes_explored: int
    # Best bound known when the search stopped early (lower bound for b and f,
    # upper bound for the chromatic number).
    bound: int | None = None


class _OutOfBudget(Exception):
    pass


class _Counter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self._deadline = time.monotonic() + budget.time_limit_ms / 1000

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise _OutOfBudget
        if self.nodes & 1023 == 0 and time.monotonic() > self._deadline:
            raise _OutOfBudget


# -- chromatic number ---------------------------------------------------------


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown from each vertex in turn; the largest is kept."""
    best: list[int] = []
    for v in range(g.n):
        clique = [v]
        cand = set(g.adjacency[v])
        while cand:
            u = max(cand, key=lambda w: (len(cand & g.neighbors(w)), -w))
            clique.append(u)
            cand &= g.neighbors(u)
        if len(clique) > len(best):
            best = clique
    return best


def dsatur(g: Graph) -> list[int]:
    """Greedy DSATUR coloring with colors starting at 1."""
    colors = [0] * g.n
    sat: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if not colors[u]),
            key=lambda u: (len(sat[u]), len(g.adjacency[u]), -u),
        )
        c = 1
        while c in sat[v]:
            c += 1
        colors[v] = c
        for u in g.adjacency[v]:
            sat[u].add(c)
    return colors


def chromatic_number(g: Graph, budget: SearchBudget = SearchBudget()) -> ExactResult:
    """Exact chromatic number by DSATUR branch and bound."""
    if g.n < 1:
        raise InputError("chromatic_number needs at least one vertex")
    counter = _Counter(budget)
    best = dsatur(g)
    ub = max(best)
    clique = greedy_clique(g)
    lb = len(clique)
    if lb < ub:
        colors = [0] * g.n
        # Seeding the clique with fixed colors breaks color symmetry.
        for i, v in enumerate(clique, start=1):
            colors[v] = i
        counts = [[0] * (g.n + 2) for _ in range(g.n)]
        for v in clique:
            for u in g.adjacency[v]:
                counts[u][colors[v]] += 1
        state = {"ub": ub, "best": best}

        def sat(u: int) -> int:
            return sum(1 for c in range(1, state["ub"]) if counts[u][c])

        def search(colored: int, used: int) -> None:
            if used >= state["ub"]:
                return
            if colored == g.n:
                state["ub"] = used
                state["best"] = colors[:]
                return
            counter.tick()
            v = max(
                (u for u in range(g.n) if not colors[u]),
                key=lambda u: (sat(u), len(g.adjacency[u]), -u),
            )
            for c in range(1, min(used + 1, state["ub"] - 1) + 1):
                if counts[v][c]:
                    continue
                colors[v] = c
                for u in g.adjacency[v]:
                    counts[u][c] += 1
                search(colored + 1, max(used, c))
                for u in g.adjacency[v]:
                    counts[u][c] -= 1
                colors[v] = 0
                if state["ub"] == lb:
                    return

        try:
            search(len(clique), len(clique))
        except _OutOfBudget:
            cert = Coloring(tuple(state["best"]), state["ub"])
            return ExactResult(None, "inconclusive", cert, counter.nodes, state["ub"])
        best, ub = state["best"], state["ub"]
    return ExactResult(ub, "exact", Coloring(tuple(best), ub), counter.nodes, ub)


# -- b-chromatic number -------------------------------------------------------


def m_degree(g: Graph) -> int:
    """Largest k with at least k vertices of degree at least k - 1."""
    degs = sorted((len(r) for r in g.adjacency), reverse=True)
    k = 0
    for i, dg in enumerate(degs, start=1):
        if dg >= i - 1:
            k = i
    return k


def _b_coloring_with(g: Graph, k: int, counter: _Counter) -> list[int] | None:
    """Search for a b-coloring with exactly k colors.

    Representatives ``r_1, ..., r_k`` (one dominant vertex per color, taken in
    descending-degree order so that ``r_j`` gets color j) are fixed first, then
    the rest of the graph is colored under the constraint that every
    representative ends up seeing all other colors.
    """
    cands = sorted(
        (v for v in range(g.n) if len(g.adjacency[v]) >= k - 1),
        key=lambda v: (-len(g.adjacency[v]), v),
    )
    if len(cands) < k:
        return None
    full = (1 << k) - 1
    for reps in combinations(cands, k):
        counter.tick()
        colors = [0] * g.n
        for j, r in enumerate(reps, start=1):
            colors[r] = j
        found = _complete_b(g, k, colors, reps, full, counter)
        if found is not None:
            return found
    return None


def _complete_b(g, k, colors, reps, full, counter) -> list[int] | None:
    n = g.n
    # forbidden[v]: bitmask of colors present around v (bit c-1 for color c).
    forbidden = [0] * n
    for v in range(n):
        if colors[v]:
            for u in g.adjacency[v]:
                forbidden[u] |= 1 << (colors[v] - 1)
    rep_set = set(reps)
    watchers = [[r for r in g.adjacency[v] if r in rep_set] for v in range(n)]

    def feasible() -> bool:
        for r in reps:
            need = full & ~forbidden[r] & ~(1 << (colors[r] - 1))
            if not need:
                continue
            free = [u for u in g.adjacency[r] if not colors[u]]
            if len(free) < bin(need).count("1"):
                return False
            avail = 0
            for u in free:
                avail |= full & ~forbidden[u]
            if need & ~avail:
                return False
        return True

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            dom = bin(full & ~forbidden[v]).count("1")
            key = (not watchers[v], dom, -len(g.adjacency[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def search(remaining: int) -> bool:
        if remaining == 0:
            return True
        counter.tick()
        v = pick()
        dom = full & ~forbidden[v]
        c = 1
        while dom:
            if dom & 1:
                colors[v] = c
                touched = []
                bit = 1 << (c - 1)
                for u in g.adjacency[v]:
                    if not forbidden[u] & bit:
                        forbidden[u] |= bit
                        touched.append(u)
                if feasible() and search(remaining - 1):
                    return True
                for u in touched:
                    forbidden[u] &= ~bit
                colors[v] = 0
            dom >>= 1
            c += 1
        return False

    if not feasible():
        return None
    remaining = sum(1 for v in range(n) if not colors[v])
    return colors[:] if search(remaining) else None


def b_number_exact(g: Graph, budget: SearchBudget = SearchBudget()) -> ExactResult:
    """Exact b-chromatic number, trying k from the m-degree bound downwards."""
    if g.n < 1:
        raise InputError("b_number_exact needs at least one vertex")
    chi = chromatic_number(g, budget)
    counter = _Counter(budget)
    counter.nodes = chi.nodes_explored
    floor = chi.value if chi.status == "exact" else len(greedy_clique(g))
    top = min(g.max_degree + 1, m_degree(g))
    try:
        for k in range(top, floor, -1):
            found = _b_coloring_with(g, k, counter)
            if found is not None:
                return ExactResult(k, "exact", Coloring(tuple(found), k), counter.nodes, k)
    except _OutOfBudget:
        return ExactResult(None, "inconclusive", None, counter.nodes, floor)
    if chi.status != "exact":
        # Every k above the clique bound was refuted but the chromatic number
        # itself is unknown.
        return ExactResult(None, "inconclusive", None, counter.nodes, floor)
    # Any coloring with the chromatic number of colors is a b-coloring.
    return ExactResult(chi.value, "exact", chi.certificate, counter.nodes, chi.value)


# -- dominant colors of (d+1)-colorings ---------------------------------------


def f_number_exact(g: Graph, budget: SearchBudget = SearchBudget()) -> ExactResult:
    """Maximum number of dominant colors over proper (d+1)-colorings.

    Branch and bound with DSATUR vertex selection. A color is counted as still
    reachable if some vertex that has it (or could take it) has neighbours of
    pairwise distinct colors so far; the bound is the number of reachable
    colors.
    """
    d = gc.is_regular(g)
    if d is None:
        raise InputError("f is only defined for regular graphs")
    palette = d + 1
    counter = _Counter(budget)
    full = (1 << palette) - 1

    start = dsatur(g)
    best_colors = start
    best_value = len(dominance_profile(g, Coloring(tuple(start), palette)).dominant_colors)

    colors = [0] * g.n
    # count[v][c]: neighbours of v colored c.
    count = [[0] * (palette + 1) for _ in range(g.n)]
    clash = [0] * g.n  # neighbour pairs of v sharing a color
    present = [0] * g.n  # bitmask of neighbour colors

    def bound() -> int:
        reach = 0
        for v in range(g.n):
            if clash[v]:
                continue
            if colors[v]:
                reach |= 1 << (colors[v] - 1)
            else:
                reach |= full & ~present[v]
            if reach == full:
                return palette
        return bin(reach).count("1")

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for u in g.adjacency[v]:
            if count[u][c]:
                clash[u] += 1
            count[u][c] += 1
            present[u] |= 1 << (c - 1)

    def unassign(v: int, c: int) -> None:
        colors[v] = 0
        for u in g.adjacency[v]:
            count[u][c] -= 1
            if count[u][c]:
                clash[u] -= 1
            else:
                present[u] &= ~(1 << (c - 1))

    state = {"value": best_value, "colors": best_colors}

    def search(remaining: int, used: int) -> None:
        if remaining == 0:
            value = len(dominance_profile(g, Coloring(tuple(colors), palette)).dominant_colors)
            if value > state["value"]:
                state["value"] = value
                state["colors"] = colors[:]
            return
        counter.tick()
        v = max(
            (u for u in range(g.n) if not colors[u]),
            key=lambda u: (bin(present[u]).count("1"), -u),
        )
        for c in range(1, min(used + 1, palette) + 1):
            if present[v] >> (c - 1) & 1:
                continue
            assign(v, c)
            if bound() > state["value"]:
                search(remaining - 1, max(used, c))
            unassign(v, c)
            if state["value"] == palette:
                return

    try:
        if best_value < palette:
            search(g.n, 0)
    except _OutOfBudget:
        cert = Coloring(tuple(state["colors"]), palette)
        return ExactResult(None, "inconclusive", cert, counter.nodes, state["value"])
    cert = Coloring(tuple(state["colors"]), palette)
    return ExactResult(state["value"], "exact", cert, counter.nodes, state["value"])


# -- brute-force oracles ------------------------------------------------------


def _proper_partitions(g: Graph, max_blocks: int):
    """Yield every proper coloring as a restricted growth string.

    Vertex 0 gets color 1 and vertex v may open at most one new color beyond
    those already used, so each partition of V into independent sets with at
    most ``max_blocks`` classes appears exactly once.
    """
    colors = [0] * g.n

    def rec(v: int, used: int):
        if v == g.n:
            yield colors[:], used
            return
        for c in range(1, min(used + 1, max_blocks) + 1):
            if any(colors[u] == c for u in g.adjacency[v] if u < v):
                continue
            colors[v] = c
            yield from rec(v + 1, max(used, c))
        colors[v] = 0

    yield from rec(0, 0)


def brute_force_b(g: Graph) -> int:
    """b(G) by enumerating all proper colorings up to renaming colors."""
    if g.n > ORACLE_MAX_N:
        raise InputError(f"brute force is limited to n <= {ORACLE_MAX_N}")
    if g.n < 1:
        raise InputError("brute_force_b needs at least one vertex")
    best = 0
    for colors, used in _proper_partitions(g, g.max_degree + 1):
        if used > best and is_b_coloring(g, Coloring(tuple(colors), used), used):
            best = used
    return best


def brute_force_f(g: Graph) -> int:
    """Maximum dominant-color count over all proper (d+1)-colorings."""
    d = gc.is_regular(g)
    if d is None:
        raise InputError("f is only defined for regular graphs")
    if g.n > ORACLE_MAX_N:
        raise InputError(f"brute force is limited to n <= {ORACLE_MAX_N}")
    best = 0
    for colors, used in _proper_partitions(g, d + 1):
        col = Coloring(tuple(colors), d + 1)
        assert is_proper(g, col)
        best = max(best, len(dominance_profile(g, col).dominant_colors))
    return best
