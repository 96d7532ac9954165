"""Independent reference implementations used only by the tests.

Nothing here imports the package's kernels: components come from a BFS,
spanning forests from filtering all 2^m subsets, activities from trying
every swap literally, and polynomials from per-subset sums.
"""
from collections import deque
from itertools import product

from activity_forge.poly import SparsePoly


def bfs_components(n, edges, subset):
    adj = {v: [] for v in range(n)}
    for j in subset:
        u, v = edges[j]
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    sizes = []
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        size = 0
        while queue:
            x = queue.popleft()
            size += 1
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        sizes.append(size)
    return sizes


def k_of(g, subset):
    return len(bfs_components(g.n_vertices, [(e.u, e.v) for e in g.edges], subset))


def all_subsets(m):
    for mask in range(1 << m):
        yield frozenset(j for j in range(m) if mask >> j & 1)


def is_spanning_forest_bf(g, subset):
    k = k_of(g, subset)
    return len(subset) == g.n_vertices - k and k == k_of(g, range(g.m))


def spanning_forests_bf(g):
    found = [s for s in all_subsets(g.m) if is_spanning_forest_bf(g, s)]
    return sorted(found, key=lambda s: tuple(sorted(s)))


def internal_by_swaps(g, rank, forest):
    """Forest edges with no larger outside edge that can replace them."""
    out = set()
    for e in forest:
        if not any(
            rank[f] > rank[e] and is_spanning_forest_bf(g, (forest - {e}) | {f})
            for f in range(g.m) if f not in forest
        ):
            out.add(e)
    return frozenset(out)


def external_by_swaps(g, rank, forest):
    """Outside edges that cannot replace any larger forest edge."""
    out = set()
    for f in range(g.m):
        if f in forest:
            continue
        if not any(
            rank[f] < rank[e] and is_spanning_forest_bf(g, (forest - {e}) | {f})
            for e in forest
        ):
            out.add(f)
    return frozenset(out)


def subset_sum(g, term):
    """Sum of ``term(subset)`` over all subsets, as a SparsePoly."""
    total = None
    for s in all_subsets(g.m):
        t = term(s)
        total = t if total is None else total + t
    return total


def tutte_bf(g):
    x, y = SparsePoly.var("x", ("x", "y")), SparsePoly.var("y", ("x", "y"))
    kg = k_of(g, range(g.m))

    def term(s):
        k = k_of(g, s)
        return (x - 1) ** (k - kg) * (y - 1) ** (len(s) - g.n_vertices + k)

    return subset_sum(g, term)


def coloring_count(n, edges, colors):
    return sum(all(c[u] != c[v] for u, v in edges) for c in product(range(colors), repeat=n))
