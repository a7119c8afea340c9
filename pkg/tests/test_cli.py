import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from bchromatic.cli import run, verify_coloring
from bchromatic.coloring import Coloring, is_b_coloring, is_proper
from bchromatic.errors import ParseError
from bchromatic.formats import parse_coloring_text, parse_graph_text, write_coloring, write_graph
from bchromatic.generators import complete_graph, named_graph, path_graph
from bchromatic.graph import Graph
from bchromatic.report import read_report, write_report, make_report


def test_parse_examples():
    k3 = parse_graph_text("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", "dimacs")
    assert k3 == complete_graph(3)
    assert parse_graph_text("0 1\n1 2\n", "edgelist") == path_graph(3)


@pytest.mark.parametrize(
    "text, fmt, line",
    [
        ("p edge 2 1\ne 1 1\n", "dimacs", 2),
        ("p edge 2 2\ne 1 2\ne 2 1\n", "dimacs", 3),
        ("p edge 2 1\ne 1 3\n", "dimacs", 2),
        ("p edge two 1\n", "dimacs", 1),
        ("e 1 2\n", "dimacs", 1),
        ("# n 3\n0 1\n1 1\n", "edgelist", 3),
        ("0 1 2\n", "edgelist", 1),
    ],
)
def test_parse_errors_name_the_line(text, fmt, line):
    with pytest.raises(ParseError) as err:
        parse_graph_text(text, fmt)
    assert err.value.line == line
    assert str(err.value).startswith(f"line {line}:")


def test_labels_are_remapped():
    g = parse_graph_text("a b\nb c\n", "edgelist")
    assert g == path_graph(3) and g.labels == ("a", "b", "c")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 12), st.integers(0, 10**6))
def test_round_trip(n, seed):
    rng = random.Random(seed)
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
    for fmt in ("dimacs", "edgelist"):
        assert parse_graph_text(write_graph(g, fmt), fmt) == g


def test_coloring_files():
    col = Coloring((1, 2, None, 3), 3)
    assert parse_coloring_text(write_coloring(col), 4, 3) == col
    with pytest.raises(ParseError):
        parse_coloring_text("0 1\n0 2\n", 4)
    with pytest.raises(ParseError):
        parse_coloring_text("9 1\n", 4)


def test_report_round_trip():
    r = make_report(named_graph("petersen"), "info", None)
    assert read_report(write_report(r)) == r


def run_json(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_b_petersen(tmp_path, capsys):
    path = tmp_path / "petersen.col"
    path.write_text(write_graph(named_graph("petersen"), "dimacs"))
    code, rep = run_json(capsys, "b", str(path))
    assert code == 0 and rep["result"]["value"] == 3


def test_info_flags(capsys):
    code, rep = run_json(capsys, "info", "heawood")
    flags = dict(rep["known_theorem_flags"])
    assert code == 0 and flags["girth_ge_6"] and not flags["thm21"]
    assert rep["graph_signature"]["girth"] == 6


def test_oracle_guard(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("# n 11\n0 1\n")
    assert run(["oracle-b", str(path)]) == 1


def test_bad_file_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.col"
    path.write_text("p edge 2 1\ne 1 1\n")
    assert run(["info", str(path)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_gen_then_construct_then_verify(tmp_path, capsys):
    gpath, cpath = tmp_path / "pg.col", tmp_path / "pg.colors"
    assert run(["gen", "projective_incidence:q=5", "-o", str(gpath)]) == 0
    code, rep = run_json(capsys, "construct", str(gpath), "--procedure", "thm23", "--coloring-out", str(cpath))
    assert code == 0 and rep["result"]["outcome"] == "success"
    code, rep = run_json(capsys, "verify", str(gpath), str(cpath), "--min-dominant", "5")
    assert code == 0 and rep["result"]["accepted"]


def test_verify_matches_predicates():
    g = named_graph("petersen")
    rng = random.Random(0)
    for _ in range(200):
        col = Coloring(tuple(rng.randint(1, 3) for _ in range(10)), 3)
        res = verify_coloring(g, col)
        assert res["accepted"] == is_proper(g, col)
        if len(col.used_colors()) == 3:
            res = verify_coloring(g, col, b=3)
            assert res["accepted"] == (is_proper(g, col) and is_b_coloring(g, col, 3))


def test_reports_are_byte_identical(capsys):
    run(["construct", "hoffman_singleton", "--procedure", "ux", "--center", "3", "--seed", "5"])
    first = capsys.readouterr().out
    run(["construct", "hoffman_singleton", "--procedure", "ux", "--center", "3", "--seed", "5"])
    assert capsys.readouterr().out == first
