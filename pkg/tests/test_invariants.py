from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from activity_forge import (EdgeOrder, GuardExceededError, Multigraph, chromatic_broken_cycle,
                            chromatic_count, chromatic_forest, chromatic_subset, connected_gf_subset,
                            connected_gf_tree, reliability_subset, reliability_tree, tutte_forest,
                            tutte_subset, uprime_forest, uprime_subset)
from activity_forge.poly import SparsePoly

from corpus import complete, grid
from oracles import coloring_count, tutte_bf

x = SparsePoly.var("x")
y = SparsePoly.var("y")
p = SparsePoly.var("p")
X1, X2, X3 = (SparsePoly.var(f"x_{i}") for i in (1, 2, 3))

FOREST_FORMS = [tutte_forest, chromatic_forest, chromatic_broken_cycle, connected_gf_tree,
                reliability_tree, uprime_forest]
SUBSET_FORMS = [tutte_subset, chromatic_subset, connected_gf_subset, reliability_subset, uprime_subset]


@st.composite
def multigraphs(draw, max_n=5, max_m=8):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_m))
    return Multigraph.from_edges(n, edges)


def cycle(n):
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_tutte_examples(k2, loop1, k3):
    for g, want in ((k2, x), (loop1, y), (k3, x ** 2 + x + y)):
        assert tutte_forest(g) == want
        assert tutte_subset(g) == want


def test_chromatic_examples(k2, loop1, k3, star3):
    assert chromatic_subset(k2) == x ** 2 - x
    assert chromatic_subset(loop1) == 0
    assert chromatic_subset(k3) == x ** 3 - 3 * x ** 2 + 2 * x
    assert chromatic_forest(k2) == x ** 2 - x
    assert chromatic_forest(loop1) == 0
    assert chromatic_forest(k3) == x ** 3 - 3 * x ** 2 + 2 * x
    assert chromatic_broken_cycle(k2) == x ** 2 - x
    assert chromatic_broken_cycle(k3) == x ** 3 - 3 * x ** 2 + 2 * x
    assert chromatic_broken_cycle(star3) == x * (x - 1) ** 3


def test_chromatic_count_examples(k3):
    assert chromatic_count(k3, 3) == 6
    assert chromatic_count(k3, 2) == 0
    assert chromatic_count(Multigraph.from_edges(2, []), 2) == 4
    with pytest.raises(GuardExceededError):
        chromatic_count(complete(12), 10)


def test_connected_gf_examples(k2, k3, two_k2):
    assert connected_gf_subset(k2) == y == connected_gf_tree(k2)
    assert connected_gf_subset(k3) == 3 * y ** 2 + y ** 3 == connected_gf_tree(k3)
    assert connected_gf_subset(two_k2) == 0 == connected_gf_tree(two_k2)


def test_reliability_examples(k2, k3, two_k2):
    assert reliability_subset(k2) == p == reliability_tree(k2)
    assert reliability_subset(k3) == 3 * p ** 2 - 2 * p ** 3 == reliability_tree(k3)
    assert reliability_subset(k3).eval({"p": Fraction(1, 2)}) == Fraction(1, 2)
    assert reliability_subset(two_k2) == 0 == reliability_tree(two_k2)
    c4 = cycle(4)
    assert reliability_tree(c4) == reliability_subset(c4) == p ** 4 + 4 * p ** 3 * (1 - p)


def test_uprime_examples(k2, k3):
    want = X1 ** 2 + X2 * SparsePoly.var("y")
    assert uprime_subset(k2) == want == uprime_forest(k2)
    assert uprime_subset(Multigraph.from_edges(2, [])) == X1 ** 2
    assert uprime_subset(k3) == uprime_forest(k3)


def test_empty_graph():
    g = Multigraph.from_edges(0, [])
    assert tutte_forest(g) == 1 == tutte_subset(g)
    assert chromatic_subset(g) == 1 == chromatic_forest(g) == chromatic_broken_cycle(g)
    assert uprime_subset(g) == 1 == uprime_forest(g)


def test_subset_guard():
    g = grid(5, 4)  # 31 edges
    for form in SUBSET_FORMS:
        with pytest.raises(GuardExceededError):
            form(g)
    with pytest.raises(GuardExceededError):
        tutte_subset(complete(6), max_exhaustive=14)


def test_tutte_against_per_subset_oracle(k3):
    for g in (k3, complete(4), cycle(5), Multigraph.from_edges(3, [(0, 1), (0, 1), (1, 1), (1, 2)])):
        assert tutte_subset(g) == tutte_bf(g) == tutte_forest(g)


@settings(max_examples=100, deadline=None)
@given(multigraphs(), st.integers(0, 10 ** 6))
def test_representations_agree(g, seed):
    order = EdgeOrder.random(g.m, seed)
    assert tutte_forest(g, order) == tutte_subset(g)
    cs = chromatic_subset(g)
    assert chromatic_forest(g, order) == cs == chromatic_broken_cycle(g, order)
    assert connected_gf_tree(g, order) == connected_gf_subset(g)
    assert reliability_tree(g, order) == reliability_subset(g)
    assert uprime_forest(g, order) == uprime_subset(g)


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_order_independence(g):
    for form in FOREST_FORMS:
        values = {form(g, EdgeOrder.random(g.m, s)) for s in range(5)}
        assert len(values) == 1


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_n=4))
def test_chromatic_ground_truth(g):
    chi = chromatic_subset(g)
    pairs = [(e.u, e.v) for e in g.edges]
    for c in range(5):
        assert chi.eval({"x": c}) == chromatic_count(g, c) == coloring_count(g.n_vertices, pairs, c)


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_tutte_specializes_to_chromatic(g):
    t = tutte_subset(g).substitute({"x": 1 - x, "y": 0})
    sign = -1 if (g.n_vertices - g.k) % 2 else 1
    assert chromatic_subset(g) == (x ** g.k * t).scale(sign)


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_reliability_bounds(g):
    r = reliability_subset(g)
    for q in (0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1):
        assert 0 <= r.eval({"p": q}) <= 1
    if g.k == 1:
        assert r.eval({"p": 1}) == 1


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_uprime_exponents_conserve_vertices(g):
    u = uprime_subset(g)
    for exp, _ in u.terms.items():
        assert sum((i + 1) * k for i, k in enumerate(exp[:-1])) == g.n_vertices
