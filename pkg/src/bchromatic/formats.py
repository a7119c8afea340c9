"""Graph and coloring file formats: DIMACS ``.col``, edge lists, and
``vertex color`` pair files."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from .coloring import Coloring
from .errors import ParseError
from .graph import Graph

GraphFormat = Literal["dimacs", "edgelist"]


def guess_format(path: str | Path) -> GraphFormat:
    suffix = Path(path).suffix.lower()
    return "dimacs" if suffix in (".col", ".dimacs") else "edgelist"


def parse_graph(path: str | Path, fmt: GraphFormat | None = None) -> Graph:
    text = Path(path).read_text()
    return parse_graph_text(text, fmt or guess_format(path))


def parse_graph_text(text: str, fmt: GraphFormat) -> Graph:
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise ParseError(f"unknown graph format {fmt!r}")


def _add_edge(edges: set, u: int, v: int, lineno: int) -> None:
    if u == v:
        raise ParseError(f"self-loop at vertex {u}", lineno)
    e = (min(u, v), max(u, v))
    if e in edges:
        raise ParseError(f"duplicate edge {e}", lineno)
    edges.add(e)


def _parse_dimacs(text: str) -> Graph:
    n = declared = header_line = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer vertex or edge count", lineno) from None
            if n < 0 or declared < 0:
                raise ParseError("negative vertex or edge count", lineno)
            header_line = lineno
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before the problem line", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("non-integer vertex", lineno) from None
            for w in (u, v):
                if not 1 <= w <= n:
                    raise ParseError(f"vertex {w} outside [1, {n}]", lineno)
            _add_edge(edges, u - 1, v - 1, lineno)
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if declared != len(edges):
        raise ParseError(f"header declares {declared} edges, found {len(edges)}", header_line)
    return Graph.from_edges(n, sorted(edges))


def _parse_edgelist(text: str) -> Graph:
    # Optional '# n <count>' header keeps isolated vertices; integer tokens
    # are 0-based vertices, anything else is treated as a label.
    n_hint = None
    rows: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.strip()
        if body.startswith("#"):
            parts = body[1:].split()
            if len(parts) == 2 and parts[0] == "n":
                try:
                    n_hint = int(parts[1])
                except ValueError:
                    raise ParseError("bad vertex count in '# n' header", lineno) from None
            continue
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise ParseError("expected two vertices per line", lineno)
        rows.append((parts[0], parts[1], lineno))
    tokens = [t for a, b, _ in rows for t in (a, b)]
    numeric = all(_is_int(t) for t in tokens)
    labels = None
    if numeric:
        index = {t: int(t) for t in tokens}
        if any(v < 0 for v in index.values()):
            raise ParseError("negative vertex index", next(ln for a, b, ln in rows if int(a) < 0 or int(b) < 0))
        n = max(index.values(), default=-1) + 1
        if n_hint is not None:
            if n_hint < n:
                bad = next(ln for a, b, ln in rows if max(int(a), int(b)) >= n_hint)
                raise ParseError(f"vertex outside [0, {n_hint})", bad)
            n = n_hint
    else:
        order = list(dict.fromkeys(tokens))
        index = {t: i for i, t in enumerate(order)}
        labels = tuple(order)
        n = len(order)
    edges: set[tuple[int, int]] = set()
    for a, b, lineno in rows:
        _add_edge(edges, index[a], index[b], lineno)
    return Graph.from_edges(n, sorted(edges), labels)


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def write_graph(g: Graph, fmt: GraphFormat) -> str:
    edges = g.edges()
    if fmt == "dimacs":
        lines = [f"p edge {g.n} {len(edges)}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    elif fmt == "edgelist":
        lines = [f"# n {g.n}"]
        lines += [f"{u} {v}" for u, v in edges]
    else:
        raise ParseError(f"unknown graph format {fmt!r}")
    return "\n".join(lines) + "\n"


def parse_coloring(path: str | Path, n: int, palette: int | None = None) -> Coloring:
    return parse_coloring_text(Path(path).read_text(), n, palette)


def parse_coloring_text(text: str, n: int, palette: int | None = None) -> Coloring:
    """``vertex color`` pairs, 0-based vertices and 1-based colors. Vertices
    not listed stay unassigned."""
    colors: list[int | None] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2 or not all(_is_int(p) for p in parts):
            raise ParseError("expected '<vertex> <color>'", lineno)
        v, c = int(parts[0]), int(parts[1])
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} outside [0, {n})", lineno)
        if c < 1 or (palette is not None and c > palette):
            raise ParseError(f"color {c} outside the palette", lineno)
        if colors[v] is not None:
            raise ParseError(f"vertex {v} colored twice", lineno)
        colors[v] = c
    return Coloring.from_list(colors, palette)


def write_coloring(col: Coloring) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(col.assignment) if c is not None)
