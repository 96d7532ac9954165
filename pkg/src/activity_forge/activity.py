"""Spanning forests and Tutte's internal/external edge activities."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from ._backend import kernels_for
from .errors import InvalidOrderError, NotSpanningForestError
from .graph import Multigraph, _count, _labels, ids, is_spanning_forest, to_subset


@dataclass(frozen=True)
class EdgeOrder:
    """Strict total order on edge ids; ``rank[j]`` is the 1-based position of edge ``j``."""

    rank: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.rank) != list(range(1, len(self.rank) + 1)):
            raise InvalidOrderError(f"ranks {self.rank} are not a permutation of 1..{len(self.rank)}")

    @classmethod
    def identity(cls, m: int) -> "EdgeOrder":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_sequence(cls, sequence: Iterable[int]) -> "EdgeOrder":
        """Order listing edge ids from smallest to largest."""
        sequence = list(sequence)
        if sorted(sequence) != list(range(len(sequence))):
            raise InvalidOrderError(f"{sequence} is not a permutation of 0..{len(sequence) - 1}")
        rank = [0] * len(sequence)
        for pos, j in enumerate(sequence):
            rank[j] = pos + 1
        return cls(tuple(rank))

    @classmethod
    def random(cls, m: int, seed=None) -> "EdgeOrder":
        seq = list(range(m))
        random.Random(seed).shuffle(seq)
        return cls.from_sequence(seq)

    @property
    def sequence(self) -> tuple[int, ...]:
        """Edge ids sorted from smallest to largest."""
        return tuple(sorted(range(len(self.rank)), key=self.rank.__getitem__))

    def __len__(self):
        return len(self.rank)


def resolve_order(g: Multigraph, order: EdgeOrder | None) -> EdgeOrder:
    if order is None:
        return EdgeOrder.identity(g.m)
    if len(order) != g.m:
        raise InvalidOrderError(f"order covers {len(order)} edges, graph has {g.m}")
    return order


@dataclass(frozen=True)
class ActivityReport:
    """Activities of one spanning forest.

    ``witnesses`` maps every forest edge to its fundamental cut (the graph
    edges joining the two halves of ``forest - e``, ``e`` included) and every
    other edge to its fundamental cycle (``f`` plus the forest path between
    its ends). A loop's witness is the empty set.
    """

    forest: frozenset
    internal: frozenset
    external: frozenset
    witnesses: Mapping[int, frozenset]

    @property
    def i(self) -> int:
        return len(self.internal)

    @property
    def e(self) -> int:
        return len(self.external)


class IndependenceResult(NamedTuple):
    ok: bool
    violation: tuple[int | None, int | None] | None = None

    def __bool__(self):
        return self.ok


def enumerate_spanning_forests(g: Multigraph) -> list[frozenset]:
    """Every spanning forest of ``g`` once, ordered lexicographically by sorted edge ids."""
    return [to_subset(f) for f in kernels_for(g.m).spanning_forests(g.n_vertices, g.us, g.vs)]


def forest_masks(g: Multigraph) -> list[int]:
    return kernels_for(g.m).spanning_forests(g.n_vertices, g.us, g.vs)


def forest_activity_masks(g: Multigraph, order: EdgeOrder | None = None) -> list[tuple[int, int, int]]:
    """``(forest, internal, external)`` bitmasks for every spanning forest."""
    order = resolve_order(g, order)
    return kernels_for(g.m).forest_activities(g.n_vertices, g.us, g.vs, order.rank)


def activity_histogram(g: Multigraph, order: EdgeOrder | None = None) -> dict[tuple[int, int], int]:
    """Number of spanning forests per ``(i(F), e(F))`` pair."""
    order = resolve_order(g, order)
    return kernels_for(g.m).activity_histogram(g.n_vertices, g.us, g.vs, order.rank)


def _checked_forest(g, forest) -> int:
    mask = g.mask(forest)
    if not is_spanning_forest(g, mask):
        raise NotSpanningForestError(f"edges {ids(mask)} do not form a spanning forest")
    return mask


def activity_masks(g: Multigraph, order: EdgeOrder | None, forest) -> tuple[int, int]:
    """``(internal, external)`` masks of one spanning forest (validated)."""
    mask = _checked_forest(g, forest)
    order = resolve_order(g, order)
    return kernels_for(g.m).forest_activity(g.n_vertices, g.us, g.vs, order.rank, mask)


def internal_activity(g: Multigraph, order: EdgeOrder | None, forest) -> frozenset:
    return to_subset(activity_masks(g, order, forest)[0])


def external_activity(g: Multigraph, order: EdgeOrder | None, forest) -> frozenset:
    return to_subset(activity_masks(g, order, forest)[1])


def _cut(g: Multigraph, forest: int, e: int) -> int:
    side = _labels(g.n_vertices, g.us, g.vs, forest & ~(1 << e))
    a, b = side[g.us[e]], side[g.vs[e]]
    out = 0
    for j in range(g.m):
        x, y = side[g.us[j]], side[g.vs[j]]
        if {x, y} == {a, b}:
            out |= 1 << j
    return out


def _cycle(g: Multigraph, forest: int, f: int) -> int:
    u, v = g.us[f], g.vs[f]
    if u == v:
        return 0
    adj: dict[int, list[tuple[int, int]]] = {}
    for j in ids(forest):
        adj.setdefault(g.us[j], []).append((g.vs[j], j))
        adj.setdefault(g.vs[j], []).append((g.us[j], j))
    via = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        for y, j in adj.get(x, ()):
            if y not in via:
                via[y] = (x, j)
                stack.append(y)
    out = 1 << f
    x = v
    while via[x] is not None:
        x, j = via[x]
        out |= 1 << j
    return out


def activity_report(g: Multigraph, order: EdgeOrder | None, forest) -> ActivityReport:
    order = resolve_order(g, order)
    mask = _checked_forest(g, forest)
    internal, external = kernels_for(g.m).forest_activity(g.n_vertices, g.us, g.vs, order.rank, mask)
    witnesses = {}
    for j in range(g.m):
        w = _cut(g, mask, j) if mask >> j & 1 else _cycle(g, mask, j)
        witnesses[j] = to_subset(w)
        active = (internal | external) >> j & 1
        if w and active and max(order.rank[x] for x in ids(w)) != order.rank[j]:
            raise AssertionError(f"witness for edge {j} does not certify its activity")
    return ActivityReport(to_subset(mask), to_subset(internal), to_subset(external), witnesses)


def check_independence(g: Multigraph, order: EdgeOrder | None, forest) -> IndependenceResult:
    """Check that activities are independent: for every internally active
    ``e`` and externally active ``f``, ``k(F) = k(F+f)`` and
    ``k(F-e+f) = k(F-e) = k(F) + 1``. Deleting ``e`` splits a component that
    adding ``f`` cannot rejoin. Reports the first failing ``(e, f)`` pair,
    with None in the slot of the edge that was not involved."""
    internal, external = activity_masks(g, order, forest)
    mask = g.mask(forest)
    n, us, vs = g.n_vertices, g.us, g.vs
    k = _count(n, us, vs, mask)
    for f in ids(external):
        if _count(n, us, vs, mask | 1 << f) != k:
            return IndependenceResult(False, (None, f))
    for e in ids(internal):
        without = mask & ~(1 << e)
        k_minus = _count(n, us, vs, without)
        for f in ids(external):
            k_plus = _count(n, us, vs, mask | 1 << f)
            k_swap = _count(n, us, vs, without | 1 << f)
            if not (k == k_plus < k_swap == k_minus == k + 1):
                return IndependenceResult(False, (e, f))
        if k_minus != k + 1:
            return IndependenceResult(False, (e, None))
    return IndependenceResult(True)
