import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bchromatic import graph as gc
from bchromatic.coloring import Coloring, dominance_profile, is_b_coloring, is_proper
from bchromatic.errors import InputError
from bchromatic.exact import (
    SearchBudget,
    b_number_exact,
    brute_force_b,
    brute_force_f,
    chromatic_number,
    f_number_exact,
)
from bchromatic.generators import complete_graph, cycle_graph, named_graph, path_graph, random_regular
from bchromatic.graph import Graph


def naive_b_and_f(g):
    """Product enumeration over every color vector, no symmetry reduction."""
    d = gc.is_regular(g)
    top = g.max_degree + 1
    best_b, best_f = 0, 0
    for colors in product(range(1, top + 1), repeat=g.n):
        c = Coloring(colors, top)
        if not is_proper(g, c):
            continue
        if d is not None:
            best_f = max(best_f, len(dominance_profile(g, c).dominant_colors))
        used = sorted(set(colors))
        small = Coloring(tuple(used.index(x) + 1 for x in colors), len(used))
        if len(dominance_profile(g, small).dominant_colors) == len(used):
            best_b = max(best_b, len(used))
    return best_b, best_f if d is not None else None


def test_chromatic_examples():
    assert chromatic_number(complete_graph(5)).value == 5
    r = chromatic_number(named_graph("petersen"))
    assert r.value == 3 and r.status == "exact"
    assert is_proper(named_graph("petersen"), r.certificate)
    assert chromatic_number(cycle_graph(6)).value == 2


def test_b_examples():
    r = b_number_exact(named_graph("petersen"))
    assert r.value == 3 and r.status == "exact"
    assert is_b_coloring(named_graph("petersen"), r.certificate, 3)
    assert b_number_exact(complete_graph(5)).value == 5
    assert b_number_exact(cycle_graph(5)).value == 3
    assert b_number_exact(named_graph("heawood")).value == 4


def test_f_examples():
    assert f_number_exact(complete_graph(5)).value == 5
    assert f_number_exact(cycle_graph(5)).value == 3
    r = f_number_exact(named_graph("petersen"))
    assert r.status == "exact" and r.value <= 3
    assert len(dominance_profile(named_graph("petersen"), r.certificate).dominant_colors) == r.value
    with pytest.raises(InputError):
        f_number_exact(path_graph(3))


def test_oracle_examples():
    assert brute_force_b(cycle_graph(5)) == 3
    assert brute_force_b(complete_graph(4)) == 4
    assert brute_force_b(path_graph(3)) == 2
    assert brute_force_f(complete_graph(5)) == 5
    assert brute_force_f(cycle_graph(5)) == 3
    assert brute_force_f(cycle_graph(4)) == naive_b_and_f(cycle_graph(4))[1]
    with pytest.raises(InputError):
        brute_force_b(random_regular(12, 3, 0))
    with pytest.raises(InputError):
        brute_force_f(path_graph(4))


def test_budget_gives_inconclusive():
    r = b_number_exact(named_graph("hoffman_singleton"), SearchBudget(node_limit=5))
    assert r.status == "inconclusive" and r.value is None
    with pytest.raises(InputError):
        SearchBudget(0, 10)


def tiny_graphs():
    return st.builds(
        lambda n, seed: Graph.from_edges(
            n,
            [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if random.Random(seed * 100 + u * n + v).random() < 0.5
            ],
        ),
        st.integers(1, 6),
        st.integers(0, 10**6),
    )


@settings(max_examples=60, deadline=None)
@given(tiny_graphs())
def test_oracles_match_naive_enumeration(g):
    b, f = naive_b_and_f(g)
    assert brute_force_b(g) == b
    if f is not None:
        assert brute_force_f(g) == f


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 9), st.integers(0, 10**6), st.sampled_from([0.3, 0.5, 0.7]))
def test_solvers_match_oracles(n, seed, p):
    rng = random.Random(seed)
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    r = b_number_exact(g)
    assert r.value == brute_force_b(g)
    assert is_b_coloring(g, r.certificate, r.value)
    if gc.is_regular(g) is not None:
        f = f_number_exact(g)
        assert f.value == brute_force_f(g)


def test_determinism():
    g = random_regular(12, 5, 3)
    assert b_number_exact(g) == b_number_exact(g)
    assert f_number_exact(g) == f_number_exact(g)
