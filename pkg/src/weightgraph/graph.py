"""Finite simple graphs stored as bitset adjacency rows.

Vertices are numbered 1..p at every public interface.  Internally row ``i``
(0-based) is an int whose bit ``j`` is set when vertices ``i+1`` and ``j+1``
are adjacent.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError

#: Distance between vertices in different components.
INFINITY = math.inf

MAX_VERTICES = 64


class SimpleGraph:
    """Immutable undirected graph without loops or multiple edges."""

    __slots__ = ("_p", "_rows", "_hash")

    def __init__(self, p: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(p, int) or p < 1:
            raise InputError(f"vertex count must be a positive integer, got {p!r}")
        if p > MAX_VERTICES:
            raise InputError(f"vertex count {p} exceeds ceiling {MAX_VERTICES}")
        rows = [0] * p
        for e in edges:
            u, v = e
            if not (1 <= u <= p and 1 <= v <= p):
                raise InputError(f"edge {{{u},{v}}} has a vertex outside 1..{p}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        self._p = p
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> SimpleGraph:
        """Build from 0-based bitset rows; rows must already be symmetric and loopless."""
        g = cls.__new__(cls)
        g._p = len(rows)
        g._rows = tuple(rows)
        g._hash = None
        return g

    @classmethod
    def complete(cls, p: int) -> SimpleGraph:
        return cls(p, combinations(range(1, p + 1), 2))

    @classmethod
    def path(cls, p: int) -> SimpleGraph:
        return cls(p, ((i, i + 1) for i in range(1, p)))

    @classmethod
    def cycle(cls, p: int) -> SimpleGraph:
        edges = [(i, i + 1) for i in range(1, p)]
        if p >= 3:
            edges.append((1, p))
        return cls(p, edges)

    @classmethod
    def star(cls, leaves: int) -> SimpleGraph:
        """K_{1,leaves} with the centre at vertex 1."""
        return cls(leaves + 1, ((1, v) for v in range(2, leaves + 2)))

    @property
    def p(self) -> int:
        return self._p

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def q(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        out = []
        for i, row in enumerate(self._rows):
            row >>= i + 1
            j = i + 1
            while row:
                if row & 1:
                    out.append((i + 1, j + 1))
                row >>= 1
                j += 1
        return out

    def _check(self, v: int) -> int:
        if not isinstance(v, int) or not 1 <= v <= self._p:
            raise InputError(f"vertex {v!r} outside 1..{self._p}")
        return v - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[self._check(u)] >> self._check(v) & 1)

    def degree(self, v: int) -> int:
        return self._rows[self._check(v)].bit_count()

    def neighbors(self, v: int) -> list[int]:
        row = self._rows[self._check(v)]
        return [j + 1 for j in range(self._p) if row >> j & 1]

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def relabel(self, perm: Sequence[int]) -> SimpleGraph:
        """Return the graph with vertex ``v`` renamed ``perm[v-1]``."""
        if sorted(perm) != list(range(1, self._p + 1)):
            raise InputError(f"not a permutation of 1..{self._p}: {perm!r}")
        return SimpleGraph(self._p, ((perm[u - 1], perm[v - 1]) for u, v in self.edges))

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._p == other._p and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._p, self._rows))
        return self._hash

    def __repr__(self):
        return f"SimpleGraph({self._p}, {self.edges!r})"


def complement(g: SimpleGraph) -> SimpleGraph:
    full = (1 << g.p) - 1
    return SimpleGraph.from_rows([(full ^ row) & ~(1 << i) for i, row in enumerate(g.rows)])


def _bfs_levels(rows: Sequence[int], src: int) -> list[float]:
    """Distances from 0-based ``src`` to every vertex; frontier expansion on bitsets."""
    dist: list[float] = [INFINITY] * len(rows)
    dist[src] = 0
    seen = 1 << src
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
        while nxt:
            low = nxt & -nxt
            dist[low.bit_length() - 1] = d
            nxt ^= low
    return dist


def distance(g: SimpleGraph, u: int, v: int) -> float | int:
    """Shortest-path length between ``u`` and ``v``; :data:`INFINITY` if unreachable."""
    i, j = g._check(u), g._check(v)
    return _bfs_levels(g.rows, i)[j]


def distance_matrix(g: SimpleGraph) -> list[list[float | int]]:
    """All-pairs distances, 0-indexed rows and columns."""
    return [_bfs_levels(g.rows, i) for i in range(g.p)]


def diameter(g: SimpleGraph) -> float | int:
    return max(max(row) for row in distance_matrix(g))


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    rows = g.rows
    remaining = (1 << g.p) - 1
    out = []
    while remaining:
        low = remaining & -remaining
        seen = low
        frontier = low
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                nxt |= rows[b.bit_length() - 1]
                frontier ^= b
            frontier = nxt & ~seen
            seen |= frontier
        out.append([j + 1 for j in range(g.p) if seen >> j & 1])
        remaining &= ~seen
    return out


def is_connected(g: SimpleGraph) -> bool:
    return len(components(g)) == 1


def power(g: SimpleGraph, n: int) -> SimpleGraph:
    """Graph on the same vertices joining pairs at distance 1..n."""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"power exponent must be a positive integer, got {n!r}")
    rows = g.rows
    out = []
    for i in range(g.p):
        reach = 1 << i
        frontier = reach
        for _ in range(n):
            nxt = 0
            while frontier:
                b = frontier & -frontier
                nxt |= rows[b.bit_length() - 1]
                frontier ^= b
            frontier = nxt & ~reach
            if not frontier:
                break
            reach |= frontier
        out.append(reach & ~(1 << i))
    return SimpleGraph.from_rows(out)


def isolated_vertices(g: SimpleGraph) -> set[int]:
    return {i + 1 for i, row in enumerate(g.rows) if row == 0}


def universal_vertices(g: SimpleGraph) -> set[int]:
    full = (1 << g.p) - 1
    return {i + 1 for i, row in enumerate(g.rows) if row | (1 << i) == full}


def find_isomorphism(g: SimpleGraph, h: SimpleGraph) -> list[int] | None:
    """Return ``m`` with ``m[v-1]`` the image in ``h`` of vertex ``v`` of ``g``, or None.

    Plain backtracking with degree filtering; independent of canonical labeling.
    """
    if g.p != h.p or g.q != h.q:
        return None
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return None
    p = g.p
    gr, hr = g.rows, h.rows
    # highest-degree vertices first constrain the search fastest
    order = sorted(range(p), key=lambda v: (-dg[v], v))
    image = [-1] * p
    used = 0

    def extend(k):
        nonlocal used
        if k == p:
            return True
        v = order[k]
        for w in range(p):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            ok = True
            for t in range(k):
                u = order[t]
                if (gr[v] >> u & 1) != (hr[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    if not extend(0):
        return None
    return [w + 1 for w in image]


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return find_isomorphism(g, h) is not None
