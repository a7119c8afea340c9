"""Command-line entry point.

Exit codes: 0 success or exact result, 2 inconclusive or failed procedure or
rejected coloring, 1 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import exact
from .coloring import Coloring, dominance_profile, is_b_coloring, is_proper, partial_dominance_profile
from .constructive import procedures as proc
from .errors import GenerationError, InfeasibleError, InputError
from .formats import parse_coloring, parse_graph, write_coloring, write_graph
from .generators import GeneratorSpec
from .graph import Graph
from .report import coloring_dict, exact_dict, make_report, write_report

OK, USAGE, NEGATIVE = 0, 1, 2


def load_graph(source: str, fmt: str | None = None) -> Graph:
    """A graph file, or a generator spec such as ``petersen`` or
    ``projective_incidence:q=7`` when no such file exists."""
    if Path(source).exists():
        return parse_graph(source, fmt)  # type: ignore[arg-type]
    try:
        spec = GeneratorSpec.parse(source)
    except InputError:
        raise InputError(f"{source!r} is neither a file nor a generator spec") from None
    return spec.build()


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bchromatic", description=__doc__.splitlines()[0])
    p.add_argument("--timing", action="store_true", help="record wall time in reports")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("graph", help="graph file or generator spec")
        sp.add_argument("--format", choices=["dimacs", "edgelist"])
        sp.add_argument("-o", "--output", help="write the report here instead of stdout")
        return sp

    graph_cmd("info", "signature and hypothesis flags")
    g = sub.add_parser("gen", help="generate a graph file")
    g.add_argument("spec")
    g.add_argument("-o", "--output", required=True)
    g.add_argument("--format", choices=["dimacs", "edgelist"])
    for name in ("chi", "b", "f"):
        sp = graph_cmd(name, f"exact {name}")
        sp.add_argument("--node-limit", type=int, default=exact.SearchBudget.node_limit)
        sp.add_argument("--time-limit", type=int, default=exact.SearchBudget.time_limit_ms)
    graph_cmd("oracle-b", "brute-force b (n <= 10)")
    graph_cmd("oracle-f", "brute-force f (n <= 10)")
    c = graph_cmd("construct", "run a constructive procedure")
    c.add_argument("--procedure", required=True, choices=["thm21", "thm22", "thm23", "ux", "thm31"])
    c.add_argument("--center", type=int)
    c.add_argument("--u-set", help="comma-separated neighbours of the center (ux only)")
    c.add_argument("--seed", type=int, default=0, help="recorded; the procedures are deterministic")
    c.add_argument("--coloring-out", help="write the final coloring as vertex/color pairs")
    v = graph_cmd("verify", "check a coloring file")
    v.add_argument("coloring")
    v.add_argument("--b", type=int, help="also require a b-coloring with this many colors")
    v.add_argument("--min-dominant", type=int, help="require this many dominant colors")
    v.add_argument("--palette", type=int)
    return p


def _exact(args, g: Graph):
    budget = exact.SearchBudget(args.node_limit, args.time_limit)
    solver = {"chi": exact.chromatic_number, "b": exact.b_number_exact, "f": exact.f_number_exact}
    res = solver[args.command](g, budget)
    return exact_dict(res), OK if res.status == "exact" else NEGATIVE


def _construct(args, g: Graph):
    name = args.procedure
    if name == "thm21":
        rep = proc.theorem_2_1_procedure(g, args.center)
    elif name == "thm22":
        rep = proc.theorem_2_2_procedure(g, args.center)
    elif name == "thm23":
        rep = proc.theorem_2_3_procedure(g, args.center)
    elif name == "thm31":
        rep = proc.theorem_3_1_procedure(g)
    else:
        x = args.center or 0
        if args.u_set:
            u_set = [int(t) for t in args.u_set.split(",")]
        else:
            d = len(g.adjacency[x])
            u_set = sorted(g.adjacency[x])[: proc.half(d) + 1]
        rep = proc.ux_coloring(g, x, u_set)
    if args.coloring_out and rep.final_coloring is not None:
        Path(args.coloring_out).write_text(write_coloring(rep.final_coloring))
    out = rep.to_dict()
    out["seed"] = args.seed
    return out, OK if rep.outcome == "success" else NEGATIVE


def verify_coloring(
    g: Graph, col: Coloring, b: int | None = None, min_dominant: int | None = None
) -> dict:
    proper = is_proper(g, col)
    total = col.is_total()
    profile = dominance_profile(g, col) if total else partial_dominance_profile(g, col)
    out = {
        "proper": proper,
        "total": total,
        "dominant_colors": sorted(profile.dominant_colors),
        "accepted": proper,
    }
    if b is not None:
        ok = total and col.palette == b and col.used_colors() == set(range(1, b + 1))
        out["b_coloring"] = bool(ok and is_b_coloring(g, col, b))
        out["accepted"] = out["accepted"] and out["b_coloring"]
    if min_dominant is not None:
        out["accepted"] = out["accepted"] and len(profile.dominant_colors) >= min_dominant
    return out


def run(argv: list[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "gen":
            g = GeneratorSpec.parse(args.spec).build()
            fmt = args.format or ("dimacs" if args.output.endswith((".col", ".dimacs")) else "edgelist")
            Path(args.output).write_text(write_graph(g, fmt))
            return OK
        g = load_graph(args.graph, args.format)
        code = OK
        if args.command == "info":
            result = None
        elif args.command in ("chi", "b", "f"):
            result, code = _exact(args, g)
        elif args.command == "oracle-b":
            result = {"value": exact.brute_force_b(g)}
        elif args.command == "oracle-f":
            result = {"value": exact.brute_force_f(g)}
        elif args.command == "construct":
            result, code = _construct(args, g)
        else:
            col = parse_coloring(args.coloring, g.n, args.palette)
            result = verify_coloring(g, col, args.b, args.min_dominant)
            result["coloring"] = coloring_dict(col)
            code = OK if result["accepted"] else NEGATIVE
    except (InputError, GenerationError, InfeasibleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    ms = round((time.perf_counter() - start) * 1000) if args.timing else 0
    text = write_report(make_report(g, args.command, result, ms))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
