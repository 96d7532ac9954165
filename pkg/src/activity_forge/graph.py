"""Multigraphs with stable edge ids and subset-indexed structural queries.

Edge subsets are handled internally as integer bitmasks (bit ``j`` set means
edge ``j`` is present); the public functions accept any iterable of edge ids
or a ``frozenset`` and return ``frozenset`` objects.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import InvalidGraphError, InvalidSubsetError

EdgeSubset = frozenset


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class Multigraph:
    """Vertices ``0..n_vertices-1`` and an edge list whose index is the edge id.

    Loops (``u == v``) and parallel edges are allowed. ``labels`` keeps the
    original vertex names when the graph was built from labelled input.
    """

    n_vertices: int
    edges: tuple[Edge, ...]
    labels: tuple[Hashable, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n_vertices < 0:
            raise InvalidGraphError("vertex count must be nonnegative")
        for j, e in enumerate(self.edges):
            if e.id != j:
                raise InvalidGraphError(f"edge ids must be dense: position {j} holds id {e.id}")
            for x in (e.u, e.v):
                if not 0 <= x < self.n_vertices:
                    raise InvalidGraphError(f"edge {j} endpoint {x} out of range for {self.n_vertices} vertices")
        if self.labels is not None and len(self.labels) != self.n_vertices:
            raise InvalidGraphError("labels must name every vertex")

    @classmethod
    def from_edges(cls, n_vertices: int, pairs: Iterable[Sequence[int]]) -> "Multigraph":
        return cls(n_vertices, tuple(Edge(j, int(u), int(v)) for j, (u, v) in enumerate(pairs)))

    @classmethod
    def from_labeled_edges(cls, pairs, vertices=()) -> "Multigraph":
        """Build from arbitrary hashable vertex labels, remapped to ``0..n-1``
        in order of first appearance (``vertices`` first, to keep isolated ones)."""
        index: dict = {}
        for x in vertices:
            index.setdefault(x, len(index))
        mapped = []
        for u, v in pairs:
            index.setdefault(u, len(index))
            index.setdefault(v, len(index))
            mapped.append((index[u], index[v]))
        g = cls.from_edges(len(index), mapped)
        return cls(g.n_vertices, g.edges, tuple(index))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def us(self) -> tuple[int, ...]:
        return tuple(e.u for e in self.edges)

    @cached_property
    def vs(self) -> tuple[int, ...]:
        return tuple(e.v for e in self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def k(self) -> int:
        """Number of connected components of the whole graph."""
        return _count(self.n_vertices, self.us, self.vs, self.full_mask)

    def mask(self, subset) -> int:
        """Bitmask for ``subset`` (iterable of edge ids, or an int mask)."""
        if isinstance(subset, int):
            if subset < 0 or subset >> self.m:
                raise InvalidSubsetError(f"mask {subset:#x} has bits beyond edge {self.m - 1}")
            return subset
        out = 0
        for j in subset:
            if not isinstance(j, int) or not 0 <= j < self.m:
                raise InvalidSubsetError(f"edge id {j!r} not in 0..{self.m - 1}")
            out |= 1 << j
        return out

    def __repr__(self):
        pairs = ", ".join(f"{e.u}-{e.v}" for e in self.edges)
        return f"Multigraph(n={self.n_vertices}, edges=[{pairs}])"


def ids(mask: int) -> list[int]:
    """Sorted edge ids of a bitmask."""
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


def to_subset(mask: int) -> frozenset:
    return frozenset(ids(mask))


def _labels(n, us, vs, mask):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    j = 0
    while mask:
        if mask & 1:
            a, b = find(us[j]), find(vs[j])
            if a != b:
                parent[a] = b
        mask >>= 1
        j += 1
    return [find(x) for x in range(n)]


def _count(n, us, vs, mask):
    parent = list(range(n))
    k = n
    j = 0
    while mask:
        if mask & 1:
            a, b = us[j], vs[j]
            while parent[a] != a:
                a = parent[a]
            while parent[b] != b:
                b = parent[b]
            if a != b:
                parent[a] = b
                k -= 1
        mask >>= 1
        j += 1
    return k


def component_count(g: Multigraph, a) -> int:
    """Components of the spanning subgraph ``(V, a)``; isolated vertices count."""
    return _count(g.n_vertices, g.us, g.vs, g.mask(a))


def component_size_profile(g: Multigraph, a) -> tuple[int, ...]:
    """``(k_1, ..., k_n)``: how many components of ``(V, a)`` have exactly i vertices."""
    roots = _labels(g.n_vertices, g.us, g.vs, g.mask(a))
    sizes: dict[int, int] = {}
    for r in roots:
        sizes[r] = sizes.get(r, 0) + 1
    profile = [0] * g.n_vertices
    for s in sizes.values():
        profile[s - 1] += 1
    return tuple(profile)


def nullity(g: Multigraph, a) -> int:
    """Cycle rank ``|a| - n + k(a)``; zero exactly when ``a`` is a forest."""
    mask = g.mask(a)
    return mask.bit_count() - g.n_vertices + _count(g.n_vertices, g.us, g.vs, mask)


def is_forest(g: Multigraph, a) -> bool:
    return nullity(g, a) == 0


def is_spanning_forest(g: Multigraph, a) -> bool:
    mask = g.mask(a)
    k = _count(g.n_vertices, g.us, g.vs, mask)
    return mask.bit_count() == g.n_vertices - k and k == g.k
