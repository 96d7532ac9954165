"""Tutte, chromatic, connected-subgraph, reliability and U' polynomials.

Each polynomial comes in a spanning-forest form (driven by activities under
an edge order) and an edge-subset form (a 2^m sum, guarded by
``max_exhaustive``). The two must agree exactly for every order.
"""
from __future__ import annotations

from itertools import product

from .activity import EdgeOrder, activity_histogram, forest_activity_masks
from ._backend import kernels_for
from .bijection import DEFAULT_MAX_EXHAUSTIVE, _submasks
from .errors import GuardExceededError
from .graph import Multigraph, component_size_profile
from .poly import SparsePoly

TUTTE_VARS = ("x", "y")


def _guard(g: Multigraph, max_exhaustive: int):
    if g.m > max_exhaustive:
        raise GuardExceededError(g.m, max_exhaustive)


def _subset_hist(g, max_exhaustive):
    _guard(g, max_exhaustive)
    return kernels_for(g.m).subset_histogram(g.n_vertices, g.us, g.vs)


def _powers(base: SparsePoly):
    cache = {}

    def get(k):
        if k not in cache:
            cache[k] = base ** k
        return cache[k]

    return get


def uprime_vars(g: Multigraph) -> tuple[str, ...]:
    return tuple(f"x_{i}" for i in range(1, g.n_vertices + 1)) + ("y",)


# Tutte

def tutte_forest(g: Multigraph, order: EdgeOrder | None = None) -> SparsePoly:
    """Sum of ``x**i(F) * y**e(F)`` over spanning forests."""
    return SparsePoly(TUTTE_VARS, activity_histogram(g, order))


def tutte_subset(g: Multigraph, max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE) -> SparsePoly:
    """Sum over ``A`` of ``(x-1)**(k(A)-k(G)) * (y-1)**(|A|-n+k(A))``."""
    x = SparsePoly.var("x", TUTTE_VARS)
    y = SparsePoly.var("y", TUTTE_VARS)
    xp, yp = _powers(x - 1), _powers(y - 1)
    total = SparsePoly(TUTTE_VARS)
    for (k, s), c in _subset_hist(g, max_exhaustive).items():
        total += (xp(k - g.k) * yp(s - g.n_vertices + k)).scale(c)
    return total


# chromatic

def chromatic_subset(g: Multigraph, max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE) -> SparsePoly:
    """Whitney's expansion: sum over ``A`` of ``(-1)**|A| * x**k(A)``."""
    terms: dict[tuple, int] = {}
    for (k, s), c in _subset_hist(g, max_exhaustive).items():
        terms[(k,)] = terms.get((k,), 0) + (-c if s & 1 else c)
    return SparsePoly(("x",), terms)


def chromatic_forest(g: Multigraph, order: EdgeOrder | None = None) -> SparsePoly:
    """``(-1)**n (-x)**k(G)`` times the sum of ``(1-x)**i(F)`` over forests with ``e(F) = 0``."""
    x = SparsePoly.var("x")
    one_minus = _powers(1 - x)
    inner = SparsePoly(("x",))
    for (i, e), c in activity_histogram(g, order).items():
        if e == 0:
            inner += one_minus(i).scale(c)
    sign = -1 if g.n_vertices % 2 else 1
    return ((-x) ** g.k * inner).scale(sign)


def chromatic_broken_cycle(g: Multigraph, order: EdgeOrder | None = None) -> SparsePoly:
    """Broken-cycle form: for each forest without external activity, every
    subset ``A'`` left after deleting internally active edges contributes
    ``(-1)**|A'| * x**(n - |A'|)``."""
    n = g.n_vertices
    terms: dict[tuple, int] = {}
    for forest, internal, external in forest_activity_masks(g, order):
        if external:
            continue
        for d in _submasks(internal):
            size = (forest & ~d).bit_count()
            key = (n - size,)
            terms[key] = terms.get(key, 0) + (-1 if size & 1 else 1)
    return SparsePoly(("x",), terms)


def chromatic_count(g: Multigraph, colors: int, max_assignments: int = 10 ** 7) -> int:
    """Proper colorings with at most ``colors`` colors, by trying every assignment."""
    if colors < 0:
        raise ValueError("colors must be nonnegative")
    if colors ** g.n_vertices > max_assignments:
        raise GuardExceededError(colors ** g.n_vertices, max_assignments)
    pairs = list(zip(g.us, g.vs))
    return sum(
        all(col[u] != col[v] for u, v in pairs)
        for col in product(range(colors), repeat=g.n_vertices)
    )


# connected spanning subgraphs and reliability

def connected_gf_subset(g: Multigraph, max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE) -> SparsePoly:
    """``S(G, y)``: connected spanning subgraphs counted by size."""
    terms = {(s,): c for (k, s), c in _subset_hist(g, max_exhaustive).items() if k == 1}
    return SparsePoly(("y",), terms)


def connected_gf_tree(g: Multigraph, order: EdgeOrder | None = None) -> SparsePoly:
    """``y**(n-1)`` times the sum of ``(1+y)**e(T)`` over spanning trees."""
    y = SparsePoly.var("y")
    if g.k != 1:
        return SparsePoly(("y",))
    one_plus = _powers(1 + y)
    inner = SparsePoly(("y",))
    for (_, e), c in activity_histogram(g, order).items():
        inner += one_plus(e).scale(c)
    return y ** (g.n_vertices - 1) * inner


def reliability_subset(g: Multigraph, max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE) -> SparsePoly:
    """All-terminal reliability: sum over connected ``A`` of ``p**|A| (1-p)**(m-|A|)``."""
    p = SparsePoly.var("p")
    pp, qp = _powers(p), _powers(1 - p)
    total = SparsePoly(("p",))
    for (k, s), c in _subset_hist(g, max_exhaustive).items():
        if k == 1:
            total += (pp(s) * qp(g.m - s)).scale(c)
    return total


def reliability_tree(g: Multigraph, order: EdgeOrder | None = None) -> SparsePoly:
    # (1-p)^(m-n+1) * sum_T (1-p)^(-e(T)) with the negative power folded in;
    # e(T) <= m-n+1 keeps every exponent nonnegative.
    p = SparsePoly.var("p")
    if g.k != 1:
        return SparsePoly(("p",))
    qp = _powers(1 - p)
    corank = g.m - g.n_vertices + 1
    inner = SparsePoly(("p",))
    for (_, e), c in activity_histogram(g, order).items():
        inner += qp(corank - e).scale(c)
    return p ** (g.n_vertices - 1) * inner


# U'

def uprime_subset(g: Multigraph, max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE) -> SparsePoly:
    """Sum over ``A`` of ``prod_i x_i**k_i(A) * y**|A|``, with ``k_i`` the
    number of components of size ``i``."""
    _guard(g, max_exhaustive)
    hist = kernels_for(g.m).subset_profile_histogram(g.n_vertices, g.us, g.vs)
    return SparsePoly(uprime_vars(g), {profile + (s,): c for (profile, s), c in hist.items()})


def uprime_forest(g: Multigraph, order: EdgeOrder | None = None) -> SparsePoly:
    """Forest form of U': only the external activity sums out (as
    ``(1+y)**e(F)``); the internal deletions stay explicit."""
    vars = uprime_vars(g)
    by_external: dict[int, dict[tuple, int]] = {}
    for forest, internal, external in forest_activity_masks(g, order):
        acc = by_external.setdefault(external.bit_count(), {})
        for d in _submasks(internal):
            a = forest & ~d
            key = component_size_profile(g, a) + (a.bit_count(),)
            acc[key] = acc.get(key, 0) + 1
    one_plus = _powers(SparsePoly.var("y", vars) + 1)
    total = SparsePoly(vars)
    for e, terms in by_external.items():
        total += SparsePoly(vars, terms) * one_plus(e)
    return total
