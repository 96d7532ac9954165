import pytest
from hypothesis import given, settings, strategies as st

from activity_forge import (EdgeOrder, InvalidOrderError, Multigraph, NotSpanningForestError,
                            activity_report, check_independence, enumerate_spanning_forests,
                            external_activity, internal_activity)
from activity_forge.graph import _count

from corpus import complete
from oracles import external_by_swaps, internal_by_swaps, spanning_forests_bf

A, B, C = 0, 1, 2
ABC = EdgeOrder((1, 2, 3))


@st.composite
def graph_with_order(draw, max_n=5, max_m=8):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_m))
    g = Multigraph.from_edges(n, edges)
    return g, EdgeOrder.from_sequence(draw(st.permutations(range(g.m))))


def test_enumerate_examples(k3, loop1):
    assert enumerate_spanning_forests(k3) == [{A, B}, {A, C}, {B, C}]
    assert enumerate_spanning_forests(Multigraph.from_edges(2, [])) == [frozenset()]
    assert enumerate_spanning_forests(loop1) == [frozenset()]


def test_enumerate_matches_brute_force_on_k3(k3):
    assert enumerate_spanning_forests(k3) == spanning_forests_bf(k3)


def test_internal_examples(k3, k2):
    assert internal_activity(k3, ABC, {B, C}) == {B, C}
    assert internal_activity(k3, ABC, {A, B}) == frozenset()
    assert internal_activity(k2, None, {0}) == {0}


def test_external_examples(k3):
    assert external_activity(k3, ABC, {A, B}) == {C}
    assert external_activity(k3, ABC, {B, C}) == frozenset()
    with_loop = Multigraph.from_edges(3, [(0, 1), (1, 2), (0, 2), (1, 1)])
    for forest in enumerate_spanning_forests(with_loop):
        assert 3 in external_activity(with_loop, EdgeOrder.random(4, 1), forest)


def test_activity_report_examples(k3, k2, p3):
    r = activity_report(k3, ABC, {A, B})
    assert r.internal == frozenset() and r.external == {C}
    assert r.witnesses[C] == {A, B, C}
    r = activity_report(k2, None, {0})
    assert r.internal == {0} and r.witnesses[0] == {0}
    r = activity_report(p3, None, {0, 1})
    assert r.internal == {0, 1} and r.external == frozenset()


def test_loop_witness_is_empty(loop1):
    r = activity_report(loop1, None, frozenset())
    assert r.external == {0}
    assert r.witnesses[0] == frozenset()


def test_non_spanning_forest_is_rejected(k3):
    for bad in ({A}, {A, B, C}, set()):
        with pytest.raises(NotSpanningForestError):
            internal_activity(k3, ABC, bad)
        with pytest.raises(NotSpanningForestError):
            activity_report(k3, ABC, bad)


def test_order_validation(k3):
    with pytest.raises(InvalidOrderError):
        EdgeOrder((1, 1, 2))
    with pytest.raises(InvalidOrderError):
        EdgeOrder.from_sequence([0, 2])
    with pytest.raises(InvalidOrderError):
        internal_activity(k3, EdgeOrder((1, 2)), {A, B})
    assert EdgeOrder.from_sequence([2, 0, 1]).rank == (2, 3, 1)
    assert EdgeOrder.from_sequence([2, 0, 1]).sequence == (2, 0, 1)


@settings(max_examples=200, deadline=None)
@given(graph_with_order())
def test_activities_match_swap_definition(case):
    g, order = case
    forests = enumerate_spanning_forests(g)
    assert forests == spanning_forests_bf(g)
    for f in forests:
        assert internal_activity(g, order, f) == internal_by_swaps(g, order.rank, f)
        assert external_activity(g, order, f) == external_by_swaps(g, order.rank, f)


@settings(max_examples=150, deadline=None)
@given(graph_with_order())
def test_cut_and_cycle_witnesses_characterize_activity(case):
    g, order = case
    rank = order.rank
    for f in enumerate_spanning_forests(g):
        r = activity_report(g, order, f)
        for j, w in r.witnesses.items():
            if not w:
                assert g.edges[j].is_loop and j in r.external
                continue
            assert j in w
            top = max(w, key=rank.__getitem__)
            if j in r.forest:
                assert (j in r.internal) == (top == j)
            else:
                assert (j in r.external) == (top == j)


@settings(max_examples=150, deadline=None)
@given(graph_with_order())
def test_cycle_minimum_never_internally_active(case):
    g, order = case
    rank = order.rank
    for f in enumerate_spanning_forests(g):
        r = activity_report(g, order, f)
        for j in range(g.m):
            w = r.witnesses[j]
            if j not in r.forest and w:
                low = min(w, key=rank.__getitem__)
                assert low not in r.internal


@settings(max_examples=150, deadline=None)
@given(graph_with_order())
def test_independence_holds(case):
    g, order = case
    for f in enumerate_spanning_forests(g):
        assert check_independence(g, order, f).ok


def test_independence_examples(k3, star3):
    assert check_independence(k3, ABC, {A, B})
    assert check_independence(star3, None, {0, 1, 2})
    k4 = complete(4)
    for seed in range(10):
        order = EdgeOrder.random(6, seed)
        for f in enumerate_spanning_forests(k4):
            assert check_independence(k4, order, f)


def test_literal_lemma_chain_is_false():
    # The chain as printed says deleting an internally active edge lowers the
    # component count; it always raises it by one. Exhibit a forest where the
    # printed form fails and the corrected form holds.
    k4 = complete(4)
    order = EdgeOrder.identity(6)
    witnessed = False
    for f in enumerate_spanning_forests(k4):
        r = activity_report(k4, order, f)
        mask = k4.mask(f)
        for e in r.internal:
            for x in r.external:
                k = _count(4, k4.us, k4.vs, mask)
                k_minus = _count(4, k4.us, k4.vs, mask & ~(1 << e))
                k_swap = _count(4, k4.us, k4.vs, (mask & ~(1 << e)) | 1 << x)
                assert not (k_swap == k_minus == k - 1)
                assert k_swap == k_minus == k + 1
                witnessed = True
    assert witnessed
