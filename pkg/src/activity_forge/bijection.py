"""The map (forest, internal deletions, external additions) -> edge subset.

``expand`` sends a triple ``(A_f, A_i, A_e)`` to ``(A_f - A_i) | A_e``;
``classify`` inverts it with a greedy forest construction, and
``verify_partition`` checks exhaustively that the triples hit every subset
of ``E`` exactly once.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce
from operator import add
from typing import Callable

from .activity import EdgeOrder, forest_activity_masks, resolve_order
from ._backend import kernels_for
from .errors import (AdditionNotActiveError, DeletionNotActiveError, ForestNotSpanningError,
                     GuardExceededError, PartitionViolation)
from .graph import Multigraph, ids, is_spanning_forest, to_subset

DEFAULT_MAX_EXHAUSTIVE = 24


@dataclass(frozen=True)
class ForestTriple:
    forest: frozenset
    deletions: frozenset = frozenset()
    additions: frozenset = frozenset()

    @classmethod
    def of(cls, forest, deletions=(), additions=()) -> "ForestTriple":
        return cls(frozenset(forest), frozenset(deletions), frozenset(additions))


@dataclass
class PartitionReport:
    covered: int
    total: int
    # (forest edge ids, number of subsets generated from it)
    per_forest: list[tuple[tuple[int, ...], int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.covered == self.total


def _expand_masks(g, order, forest, deletions, additions) -> int:
    if not is_spanning_forest(g, forest):
        raise ForestNotSpanningError(f"edges {ids(forest)} do not form a spanning forest")
    internal, external = kernels_for(g.m).forest_activity(g.n_vertices, g.us, g.vs, order.rank, forest)
    if deletions & ~internal:
        raise DeletionNotActiveError(f"deletions {ids(deletions & ~internal)} are not internally active")
    if additions & ~external:
        raise AdditionNotActiveError(f"additions {ids(additions & ~external)} are not externally active")
    return (forest & ~deletions) | additions


def expand(g: Multigraph, order: EdgeOrder | None, t: ForestTriple) -> frozenset:
    """``(A_f - A_i) | A_e`` after checking the triple's invariants."""
    order = resolve_order(g, order)
    mask = _expand_masks(g, order, g.mask(t.forest), g.mask(t.deletions), g.mask(t.additions))
    return to_subset(mask)


def classify_mask(g: Multigraph, order: EdgeOrder, a: int) -> tuple[int, int, int]:
    rank = order.rank
    inside = sorted((j for j in range(g.m) if a >> j & 1), key=rank.__getitem__)
    outside = sorted((j for j in range(g.m) if not a >> j & 1), key=rank.__getitem__, reverse=True)
    parent = list(range(g.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest = 0
    for j in inside + outside:
        x, y = find(g.us[j]), find(g.vs[j])
        if x != y:
            parent[x] = y
            forest |= 1 << j
    return forest, forest & ~a, a & ~forest


def classify(g: Multigraph, order: EdgeOrder | None, a) -> ForestTriple:
    """The unique triple expanding to ``a``.

    Edges of ``a`` are taken in increasing order, then the remaining edges in
    decreasing order, each kept when it does not close a cycle.
    """
    order = resolve_order(g, order)
    forest, deletions, additions = classify_mask(g, order, g.mask(a))
    return ForestTriple(to_subset(forest), to_subset(deletions), to_subset(additions))


def _submasks(mask):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def iter_triple_masks(g: Multigraph, order: EdgeOrder | None = None):
    """Yield ``(forest, deletions, additions)`` masks for every valid triple."""
    for forest, internal, external in forest_activity_masks(g, order):
        for d in _submasks(internal):
            for ad in _submasks(external):
                yield forest, d, ad


def _guard(g, max_exhaustive):
    if g.m > max_exhaustive:
        raise GuardExceededError(g.m, max_exhaustive)


def verify_partition(g: Multigraph, order: EdgeOrder | None = None,
                     max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE) -> PartitionReport:
    """Expand every triple and check each subset of ``E`` is produced exactly once.

    Raises ``PartitionViolation`` on a duplicate or a missed subset.
    """
    _guard(g, max_exhaustive)
    order = resolve_order(g, order)
    seen = bytearray(1 << g.m)
    report = PartitionReport(0, 1 << g.m)
    for forest, internal, external in forest_activity_masks(g, order):
        count = 0
        for d in _submasks(internal):
            base = forest & ~d
            for ad in _submasks(external):
                a = base | ad
                if seen[a]:
                    raise PartitionViolation(f"subset {ids(a)} produced twice (second time from forest {ids(forest)})")
                seen[a] = 1
                count += 1
        report.per_forest.append((tuple(ids(forest)), count))
        report.covered += count
    if report.covered != report.total:
        missing = seen.index(0)
        raise PartitionViolation(f"subset {ids(missing)} is never produced")
    return report


def sampled_roundtrip(g: Multigraph, order: EdgeOrder | None = None, samples: int = 1000, seed=None) -> int:
    """Round-trip random subsets and random valid triples; returns the number of checks.

    For graphs too large for ``verify_partition``.
    """
    order = resolve_order(g, order)
    rng = random.Random(seed)
    checks = 0
    for _ in range(samples):
        a = rng.getrandbits(g.m) if g.m else 0
        forest, d, ad = classify_mask(g, order, a)
        if _expand_masks(g, order, forest, d, ad) != a:
            raise PartitionViolation(f"expand(classify({ids(a)})) differs")
        internal, external = kernels_for(g.m).forest_activity(g.n_vertices, g.us, g.vs, order.rank, forest)
        d = internal & rng.getrandbits(max(g.m, 1))
        ad = external & rng.getrandbits(max(g.m, 1))
        if classify_mask(g, order, (forest & ~d) | ad) != (forest, d, ad):
            raise PartitionViolation(f"classify(expand(triple on forest {ids(forest)})) differs")
        checks += 2
    return checks


def activity_count_identity(g: Multigraph, order: EdgeOrder | None = None) -> bool:
    """Whether the sum over spanning forests of ``2**(i + e)`` equals ``2**m``."""
    total = sum(2 ** (i.bit_count() + e.bit_count()) for _, i, e in forest_activity_masks(g, order))
    return total == 2 ** g.m


def transfer_sum(g: Multigraph, order: EdgeOrder | None, f: Callable[[frozenset], object]):
    """Sum ``f`` over the expansions of all triples.

    Only ``+`` is used (no zero element needed), so ``f`` may map into any
    commutative semigroup. Equals ``direct_sum(g, f)``.
    """
    return reduce(add, (f(to_subset((forest & ~d) | ad)) for forest, d, ad in iter_triple_masks(g, order)))


def direct_sum(g: Multigraph, f: Callable[[frozenset], object]):
    """Sum ``f`` over every subset of ``E``."""
    return reduce(add, (f(to_subset(a)) for a in range(1 << g.m)))
