"""Finite metric spaces with exact rational distances.

A point x lies between a and b when d(a,x) + d(x,b) = d(a,b).  Equality
is exact: distances are ints or Fractions, never floats, because a
tolerance-based comparison would silently change line counts.
"""

from __future__ import annotations

import numbers
from typing import Iterable, Sequence

from .core import BetweennessRelation, GroundSet
from .errors import DisconnectedError, MetricError, SizeError
from .graphs import Graph


class MetricSpace:
    """Immutable metric on points 0..n-1.

    Construction validates every axiom and names the offending entries:
    entries must be exact rationals, the diagonal zero, the matrix
    symmetric with positive off-diagonal entries, and every triple must
    satisfy the triangle inequality.
    """

    __slots__ = ("universe", "dist")

    def __init__(self, universe: GroundSet, dist: Iterable[Sequence]):
        n = universe.size
        rows = tuple(tuple(row) for row in dist)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise SizeError(f"expected an {n} x {n} distance matrix")
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if isinstance(value, float) or not isinstance(
                    value, numbers.Rational
                ):
                    raise MetricError(
                        f"dist[{i}][{j}] = {value!r} is not an exact rational"
                    )
        for i in range(n):
            if rows[i][i] != 0:
                raise MetricError(f"dist[{i}][{i}] must be 0, got {rows[i][i]}")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise MetricError(f"dist[{i}][{j}] != dist[{j}][{i}]")
                if rows[i][j] <= 0:
                    raise MetricError(
                        f"dist[{i}][{j}] = {rows[i][j]} must be positive"
                    )
        for i in range(n):
            row_i = rows[i]
            for j in range(n):
                if i == j:
                    continue
                d_ij = row_i[j]
                row_j = rows[j]
                for k in range(n):
                    if row_i[k] > d_ij + row_j[k]:
                        raise MetricError(
                            f"triangle inequality fails: dist[{i}][{k}] > "
                            f"dist[{i}][{j}] + dist[{j}][{k}]"
                        )
        self.universe = universe
        self.dist = rows

    @classmethod
    def from_rows(cls, dist: Iterable[Sequence]) -> "MetricSpace":
        rows = tuple(tuple(row) for row in dist)
        return cls(GroundSet.of(len(rows)), rows)

    @property
    def size(self) -> int:
        return self.universe.size


def metric_betweenness(m: MetricSpace) -> BetweennessRelation:
    """Betweenness relation with (a, x, b) when d(a,x) + d(x,b) = d(a,b)."""
    n = m.size
    dist = m.dist
    triples = []
    for a in range(n):
        for b in range(a + 1, n):
            d_ab = dist[a][b]
            for x in range(n):
                if x != a and x != b and dist[a][x] + dist[x][b] == d_ab:
                    triples.append((a, x, b))
    return BetweennessRelation(m.universe, triples)


def graph_shortest_path_metric(g: Graph) -> MetricSpace:
    """Hop-count shortest-path metric of a connected graph."""
    n = g.size
    adj = g.adj
    full = (1 << n) - 1
    rows = []
    for source in range(n):
        dist_row = [0] * n
        seen = 1 << source
        frontier = seen
        hops = 0
        while frontier:
            hops += 1
            reached = 0
            scan = frontier
            while scan:
                low = scan & -scan
                reached |= adj[low.bit_length() - 1]
                scan ^= low
            frontier = reached & ~seen
            seen |= frontier
            probe = frontier
            while probe:
                low = probe & -probe
                dist_row[low.bit_length() - 1] = hops
                probe ^= low
        if seen != full:
            raise DisconnectedError(
                "shortest-path metric needs a connected graph"
            )
        rows.append(dist_row)
    return MetricSpace(g.universe, rows)
