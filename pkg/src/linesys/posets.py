"""Finite strict partial orders with cached longest-chain levels.

A point x lies between a and b exactly when a < x < b or b < x < a, so
the line of a comparable pair is the pair plus everything comparable to
both of its points, and the line of an incomparable pair is the bare
pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import BetweennessRelation, GroundSet, bits_of
from .errors import CycleError, InternalError, SizeError, UnknownPointError
from .graphs import Graph


def _transitive_closure(rows: list[int]) -> list[int]:
    # Repeated squaring: each pass extends reachability from <= k steps
    # to <= 2k steps, so O(log n) passes suffice.
    n = len(rows)
    while True:
        changed = False
        nxt = []
        for i in range(n):
            reach = rows[i]
            acc = reach
            for j in bits_of(reach):
                acc |= rows[j]
            nxt.append(acc)
            changed = changed or acc != reach
        if not changed:
            return nxt
        rows = nxt


class Poset:
    """Immutable strict partial order stored as successor bitmasks.

    ``succ[v]`` holds every point strictly above v in the (transitively
    closed) order; ``pred[v]`` every point strictly below.  ``levels[v]``
    is the size of the longest chain ending at v, so the level sets
    partition the poset into ``height`` antichains.
    """

    __slots__ = ("universe", "succ", "pred", "levels", "height")

    def __init__(self, universe: GroundSet, succ_rows: Iterable[int]):
        n = universe.size
        succ = tuple(succ_rows)
        if len(succ) != n:
            raise SizeError(f"expected {n} order rows, got {len(succ)}")
        full = (1 << n) - 1
        for v, row in enumerate(succ):
            if row & ~full:
                raise UnknownPointError(f"order row {v} mentions points >= {n}")
            if row >> v & 1:
                raise CycleError(f"point {v} precedes itself")
        for v in range(n):
            for u in bits_of(succ[v]):
                if succ[u] >> v & 1:
                    raise CycleError(f"points {v} and {u} precede each other")
                if succ[u] & ~succ[v]:
                    # Construction sites (from_covers, enumeration) always
                    # hand over closed rows, so this is a bug, not input.
                    raise InternalError(
                        f"order rows are not transitively closed at {v} < {u}"
                    )
        pred = [0] * n
        for v in range(n):
            for u in bits_of(succ[v]):
                pred[u] |= 1 << v
        # Longest chain ending at each point; points in predecessor-count
        # order form a topological order of the closed relation.
        levels = [0] * n
        for v in sorted(range(n), key=lambda x: pred[x].bit_count()):
            best = 0
            for u in bits_of(pred[v]):
                if levels[u] > best:
                    best = levels[u]
            levels[v] = best + 1
        self.universe = universe
        self.succ = succ
        self.pred = tuple(pred)
        self.levels = tuple(levels)
        self.height = max(levels)

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]]) -> "Poset":
        """Poset from cover (or any generating) relations a < b.

        The transitive closure is taken, so supplying the full order
        relation instead of covers is accepted.
        """
        universe = GroundSet.of(n)
        rows = [0] * n
        for a, b in covers:
            universe.check_point(a)
            universe.check_point(b)
            rows[a] |= 1 << b
        closed = _transitive_closure(rows)
        for v in range(n):
            if closed[v] >> v & 1:
                raise CycleError(f"cover relations create a cycle through point {v}")
        return cls(universe, closed)

    @property
    def size(self) -> int:
        return self.universe.size

    def is_less(self, a: int, b: int) -> bool:
        self.universe.check_point(a)
        self.universe.check_point(b)
        return bool(self.succ[a] >> b & 1)

    def comparable(self, a: int, b: int) -> bool:
        return bool((self.succ[a] | self.pred[a]) >> b & 1)

    def comparables(self, v: int) -> int:
        """Bitmask of points comparable with v."""
        return self.succ[v] | self.pred[v]

    def relation_pairs(self) -> Iterator[tuple[int, int]]:
        """All ordered pairs (a, b) with a < b in the order."""
        for a in range(self.size):
            for b in bits_of(self.succ[a]):
                yield (a, b)


def poset_betweenness(p: Poset) -> BetweennessRelation:
    """Betweenness relation with (a, x, b) when a < x < b or b < x < a."""
    n = p.size
    succ, pred = p.succ, p.pred
    mid = [[0] * n for _ in range(n)]
    outer = [[0] * n for _ in range(n)]
    for a in range(n):
        succ_a, pred_a = succ[a], pred[a]
        mid_a, outer_a = mid[a], outer[a]
        for b in range(n):
            if succ_a >> b & 1:
                mid_a[b] = succ_a & pred[b]
            elif pred_a >> b & 1:
                mid_a[b] = pred_a & succ[b]
            # outer[x=a][u=b]: partners beyond b through middle a
            if pred_a >> b & 1:
                outer_a[b] = succ_a
            elif succ_a >> b & 1:
                outer_a[b] = pred_a
    return BetweennessRelation._from_matrices(
        p.universe, tuple(map(tuple, mid)), tuple(map(tuple, outer))
    )


@dataclass(frozen=True)
class AntichainPartition:
    """Disjoint antichain layers covering the poset, one per level."""

    layers: tuple[frozenset[int], ...]


def mirsky_partition(p: Poset) -> AntichainPartition:
    """Partition into height-many antichains by longest-chain level.

    Layer i (1-based) collects the points whose longest chain ending
    there has exactly i points; by Mirsky's theorem no partition into
    antichains can use fewer layers.
    """
    layers = [set() for _ in range(p.height)]
    for v, level in enumerate(p.levels):
        layers[level - 1].add(v)
    return AntichainPartition(tuple(frozenset(layer) for layer in layers))


def maximum_chain_through_levels(p: Poset) -> tuple[int, ...]:
    """A maximum chain c_1 < ... < c_H with c_i at level i.

    An arbitrary maximum chain need not meet every level set at its own
    level, so the chain is built top-down: start from the smallest point
    of the top level, then repeatedly take the smallest predecessor one
    level down (one always exists by the level recurrence).
    """
    top = min(v for v in range(p.size) if p.levels[v] == p.height)
    chain = [top]
    for level in range(p.height - 1, 0, -1):
        current = chain[-1]
        chain.append(
            min(u for u in bits_of(p.pred[current]) if p.levels[u] == level)
        )
    chain.reverse()
    return tuple(chain)


def comparability_graph(p: Poset) -> Graph:
    """Graph joining exactly the comparable pairs.

    Its triangles are exactly the 3-chains of the poset, so the poset
    and the graph induce the same line system.
    """
    return Graph(p.universe, [p.succ[v] | p.pred[v] for v in range(p.size)])


def is_extremal_poset(p: Poset) -> bool:
    """True when the poset is a chain on all but one point plus a point
    comparable with at most one chain element: the only shape attaining
    exactly n distinct lines when no line is universal.
    """
    n = p.size
    if n < 2:
        raise SizeError("the extremal shape needs at least two points")
    for v in range(n):
        if p.comparables(v).bit_count() > 1:
            continue
        rest = [u for u in range(n) if u != v]
        if all(p.comparable(a, b) for i, a in enumerate(rest) for b in rest[i + 1:]):
            return True
    return False
