"""Graph signatures, hypothesis flags of known results, and JSON reports."""

from __future__ import annotations

import json
from typing import Any

from . import graph as gc
from .coloring import Coloring
from .exact import ExactResult
from .graph import Graph


def graph_signature(g: Graph) -> dict[str, Any]:
    return {
        "n": g.n,
        "m": g.m,
        "regular_degree": gc.is_regular(g) if g.n else None,
        "girth": gc.girth(g),
        "diameter": gc.diameter(g) if g.n else None,
        "has_c4": gc.has_cycle_of_length(g, 4),
        "has_c6": gc.has_cycle_of_length(g, 6),
    }


def known_theorem_flags(g: Graph, sig: dict[str, Any] | None = None) -> list[list]:
    """``[flag id, hypothesis satisfied]`` pairs.

    Each flag states only whether the hypotheses of a known sufficient
    condition hold; nothing here claims the conclusion.
    """
    sig = sig or graph_signature(g)
    d, n = sig["regular_degree"], sig["n"]
    girth, diam = sig["girth"], sig["diameter"]
    c4free, c6free = not sig["has_c4"], not sig["has_c6"]
    reg = d is not None
    flags = {
        # sufficient conditions for b = d + 1 cited from prior work
        "order_ge_d4": reg and n >= d**4,
        "order_ge_2d3_minus_d2_plus_d": reg and n >= 2 * d**3 - d**2 + d,
        "order_ge_2d3_minus_2d2_plus_2d": reg and n >= 2 * d**3 - 2 * d**2 + 2 * d,
        "c4free_order_ge_d3_plus_d": reg and c4free and n >= d**3 + d,
        "girth_ge_6": reg and girth is not None and girth >= 6,
        "girth5_no_c6": reg and girth == 5 and c6free,
        "c4free_d_ge_6_diam_ge_d": reg and c4free and d >= 6 and diam is not None and diam >= d,
        "c4free_diam_ge_6": reg and c4free and diam is not None and diam >= 6,
        # hypotheses of the procedures implemented here
        "thm21": reg and d >= 7 and c4free and c6free,
        "thm23": reg and d >= 7 and c4free,
        "thm31": reg and d >= 7 and girth == 5 and diam == 5,
    }
    return [[k, bool(v)] for k, v in sorted(flags.items())]


def coloring_dict(col: Coloring | None) -> dict | None:
    if col is None:
        return None
    return {"palette": col.palette, "assignment": list(col.assignment)}


def exact_dict(res: ExactResult) -> dict:
    return {
        "value": res.value,
        "status": res.status,
        "certificate": coloring_dict(res.certificate),
        "nodes_explored": res.nodes_explored,
        "bound": res.bound,
    }


def make_report(g: Graph, command: str, result: Any, wall_time_ms: int = 0) -> dict:
    sig = graph_signature(g)
    return {
        "command": command,
        "graph_signature": sig,
        "known_theorem_flags": known_theorem_flags(g, sig),
        "result": result,
        "wall_time_ms": wall_time_ms,
    }


def write_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def read_report(text: str) -> dict:
    return json.loads(text)
