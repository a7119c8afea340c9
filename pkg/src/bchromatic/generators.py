"""Named graphs and parametric families used as test instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal

from . import graph as gc
from ._named_data import EDGES as _NAMED_EDGES
from .errors import GenerationError, InputError
from .graph import Graph

NAMED_SIGNATURES = {
    # name: (n, degree, girth, diameter)
    "petersen": (10, 3, 5, 2),
    "heawood": (14, 3, 6, 3),
    "mcgee": (24, 3, 7, 4),
    "robertson": (19, 4, 5, 3),
    "hoffman_singleton": (50, 7, 5, 2),
}

MAX_PAIRING_RESTARTS = 10_000


@dataclass(frozen=True)
class GeneratorSpec:
    family: Literal["named", "complete", "cycle", "path", "random_regular", "projective_incidence"]
    name: str | None = None
    n: int | None = None
    d: int | None = None
    q: int | None = None
    seed: int = 0

    @classmethod
    def parse(cls, text: str) -> GeneratorSpec:
        """Parse ``family[:key=value,...]``, e.g. ``random_regular:n=20,d=3,seed=7``.

        A bare graph name such as ``petersen`` is shorthand for the named family.
        """
        family, _, rest = text.partition(":")
        if family in NAMED_SIGNATURES:
            return cls("named", name=family)
        params: dict[str, object] = {}
        for item in filter(None, rest.split(",")):
            key, eq, value = item.partition("=")
            if not eq or key not in ("name", "n", "d", "q", "seed"):
                raise InputError(f"bad generator parameter {item!r}")
            params[key] = value if key == "name" else int(value)
        if family not in ("named", "complete", "cycle", "path", "random_regular", "projective_incidence"):
            raise InputError(f"unknown generator family {family!r}")
        return cls(family, **params)  # type: ignore[arg-type]

    def build(self) -> Graph:
        if self.family == "named":
            return named_graph(self.name or "")
        if self.family == "complete":
            return complete_graph(_need(self.n, "n"))
        if self.family == "cycle":
            return cycle_graph(_need(self.n, "n"))
        if self.family == "path":
            return path_graph(_need(self.n, "n"))
        if self.family == "random_regular":
            return random_regular(_need(self.n, "n"), _need(self.d, "d"), self.seed)
        return projective_incidence(_need(self.q, "q"))


def _need(value: int | None, key: str) -> int:
    if value is None:
        raise InputError(f"generator parameter {key!r} is required")
    return value


def named_graph(name: str) -> Graph:
    try:
        edges = _NAMED_EDGES[name]
    except KeyError:
        raise InputError(
            f"unknown graph {name!r}; expected one of {sorted(_NAMED_EDGES)}"
        ) from None
    return Graph.from_edges(NAMED_SIGNATURES[name][0], edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


def projective_incidence(q: int) -> Graph:
    """Point-line incidence graph of the projective plane over GF(q), q prime.

    Points ``0..N-1`` and lines ``N..2N-1`` with ``N = q^2 + q + 1``; both are
    normalised homogeneous triples, and a point lies on a line when their dot
    product vanishes mod q.
    """
    if not _is_prime(q):
        raise InputError(f"q={q} is not prime (prime powers are not supported)")
    if q > 13:
        raise InputError("q must be at most 13")
    triples = []
    for a in range(q):
        for b in range(q):
            triples.append((1, a, b))
    for b in range(q):
        triples.append((0, 1, b))
    triples.append((0, 0, 1))
    size = len(triples)
    edges = []
    for i, p in enumerate(triples):
        for j, line in enumerate(triples):
            if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0:
                edges.append((i, size + j))
    return Graph.from_edges(2 * size, edges)


def random_regular(n: int, d: int, seed: int, max_restarts: int = MAX_PAIRING_RESTARTS) -> Graph:
    """A d-regular simple graph from the pairing model.

    Stubs are shuffled and paired; any self-loop or repeated pair discards the
    whole attempt. Dense requests (``d > (n - 1) / 2``) sample the sparser
    complement instead, since simple pairings become vanishingly rare. The
    output depends only on ``(n, d, seed)``.
    """
    if not 0 <= d < n or (n * d) % 2:
        raise InputError(f"no {d}-regular simple graph on {n} vertices")
    if 2 * d > n - 1:
        sparse = random_regular(n, n - 1 - d, seed, max_restarts)
        return Graph.from_edges(
            n, ((u, v) for u in range(n) for v in range(u + 1, n) if not sparse.has_edge(u, v))
        )
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(max_restarts):
        rng.shuffle(stubs)
        edges = set()
        for a, b in zip(stubs[::2], stubs[1::2]):
            e = (a, b) if a < b else (b, a)
            if a == b or e in edges:
                break
            edges.add(e)
        else:
            return Graph.from_edges(n, sorted(edges))
    raise GenerationError(f"pairing model failed {max_restarts} times for n={n}, d={d}")


def _short_cycle_edges(g_adj: list[set[int]], target: int) -> set[tuple[int, int]]:
    """Edges lying on some cycle shorter than ``target``."""
    bad = set()
    for u in range(len(g_adj)):
        for v in g_adj[u]:
            if u < v and _dist_without_edge(g_adj, u, v, target - 2) is not None:
                bad.add((u, v))
    return bad


def _dist_without_edge(adj: list[set[int]], u: int, v: int, limit: int) -> int | None:
    # Distance from u to v avoiding the edge uv, if at most ``limit``.
    frontier = {u}
    seen = {u}
    for depth in range(1, limit + 1):
        nxt = set()
        for a in frontier:
            for b in adj[a]:
                if (a == u and b == v) or b in seen:
                    continue
                if b == v:
                    return depth
                seen.add(b)
                nxt.add(b)
        frontier = nxt
        if not frontier:
            break
    return None


def girth_boost(g: Graph, target_girth: int, seed: int, max_swaps: int) -> Graph | None:
    """Push the girth of a regular graph up to ``target_girth`` by edge swaps.

    Each step picks an edge on a too-short cycle and a random second edge
    ``cd`` and rewires ``ab, cd`` to ``ac, bd`` (or ``ad, bc``), keeping the
    degree sequence. A swap is kept only if it lowers the number of edges on
    short cycles. Returns ``None`` once ``max_swaps`` attempts are used up.
    """
    if g.n == 0 or gc.is_regular(g) is None:
        raise InputError("girth_boost needs a regular graph")
    if target_girth < 4:
        raise InputError("target_girth must be at least 4")
    current = gc.girth(g)
    if current is None or current >= target_girth:
        return g
    rng = random.Random(seed)
    adj = [set(r) for r in g.adjacency]
    bad = _short_cycle_edges(adj, target_girth)
    edges = sorted({(u, v) for u in range(g.n) for v in adj[u] if u < v})
    for _ in range(max_swaps):
        if not bad:
            break
        a, b = rng.choice(sorted(bad))
        c, d = rng.choice(edges)
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or c in adj[a] or d in adj[b]:
            continue
        _rewire(adj, (a, b), (c, d), (a, c), (b, d))
        new_bad = _short_cycle_edges(adj, target_girth)
        if len(new_bad) < len(bad):
            bad = new_bad
            edges = sorted({(u, v) for u in range(g.n) for v in adj[u] if u < v})
        else:
            _rewire(adj, (a, c), (b, d), (a, b), (c, d))
    if bad:
        return None
    return Graph(g.n, tuple(tuple(sorted(r)) for r in adj))


def _rewire(adj, old1, old2, new1, new2) -> None:
    for u, v in (old1, old2):
        adj[u].discard(v)
        adj[v].discard(u)
    for u, v in (new1, new2):
        adj[u].add(v)
        adj[v].add(u)

