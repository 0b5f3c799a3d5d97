"""Multiplicity-one weight systems and the graphs they induce.

A weight is a tuple of exact rationals (its coordinates in a fixed basis of
the torus dual).  Vertex ``i`` of the raw graph is joined to vertex ``j``
when the sum of weights ``i`` and ``j`` is again a weight; the weight graph
is the complement of the raw graph.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CapacityError, InputError, RepeatedWeights
from .graph import SimpleGraph, complement
from .linalg import to_fraction

Weight = tuple[Fraction, ...]

ORDER_SEARCH_MAX = 10


class WeightSystem:
    """Ordered list of pairwise distinct rational weight vectors of equal length."""

    __slots__ = ("rank", "weights", "_index")

    def __init__(self, weights: Iterable[Sequence], rank: int | None = None):
        ws = [tuple(to_fraction(x) for x in w) for w in weights]
        if not ws:
            raise InputError("a weight system needs at least one weight")
        if rank is None:
            rank = len(ws[0])
        for i, w in enumerate(ws, 1):
            if len(w) != rank:
                raise InputError(f"weight {i} has {len(w)} coordinates, expected {rank}")
        index: dict[Weight, int] = {}
        repeats = []
        for i, w in enumerate(ws, 1):
            if w in index:
                repeats.append((index[w], i))
            else:
                index[w] = i
        if repeats:
            raise RepeatedWeights(repeats)
        self.rank = rank
        self.weights: tuple[Weight, ...] = tuple(ws)
        self._index = index

    @property
    def p(self) -> int:
        return len(self.weights)

    def index_of(self, w: Sequence) -> int | None:
        """1-based position of weight ``w``, or None if it is not in the system."""
        return self._index.get(tuple(to_fraction(x) for x in w))

    def __len__(self):
        return len(self.weights)

    def __eq__(self, other):
        if not isinstance(other, WeightSystem):
            return NotImplemented
        return self.rank == other.rank and self.weights == other.weights

    def __repr__(self):
        body = ", ".join("(" + ",".join(str(x) for x in w) + ")" for w in self.weights)
        return f"WeightSystem([{body}])"


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sum_triples(ws: WeightSystem) -> list[tuple[int, int, int]]:
    """All ``(i, j, k)`` with ``i < j`` and weight_i + weight_j == weight_k, sorted."""
    out = []
    for i, j in combinations(range(ws.p), 2):
        k = ws._index.get(_add(ws.weights[i], ws.weights[j]))
        if k is not None:
            out.append((i + 1, j + 1, k))
    return out


def self_sums(ws: WeightSystem) -> list[tuple[int, int]]:
    """Pairs ``(i, k)`` where twice weight_i is weight_k.  These never become edges."""
    out = []
    for i, w in enumerate(ws.weights, 1):
        k = ws._index.get(_add(w, w))
        if k is not None:
            out.append((i, k))
    return out


def raw_graph(ws: WeightSystem) -> SimpleGraph:
    return SimpleGraph(ws.p, ((i, j) for i, j, _ in sum_triples(ws)))


def weight_graph(ws: WeightSystem) -> SimpleGraph:
    return complement(raw_graph(ws))


def max_weight_sums(p: int) -> int:
    """Largest possible number of index sums ``i + j = k`` with ``1 <= i < j`` and ``k <= p``."""
    if p < 1:
        raise InputError(f"p must be positive, got {p}")
    return sum(p - 2 * j for j in range(1, p // 2 + 1))


def index_compatible_order(ws: WeightSystem) -> tuple[int, ...] | None:
    """Find a relabeling that turns every weight relation into an index relation.

    Returns ``sigma`` (``sigma[i-1]`` is the new index of weight ``i``) such
    that each sum triple ``(i, j, k)`` satisfies ``sigma(i) + sigma(j) ==
    sigma(k)``, or None when exhaustive search finds none.  The identity is
    tried first; otherwise the lexicographically first solution is returned.
    """
    p = ws.p
    if p > ORDER_SEARCH_MAX:
        raise CapacityError(f"order search supports p <= {ORDER_SEARCH_MAX}, got {p}")
    triples = sum_triples(ws)
    identity = tuple(range(1, p + 1))
    if all(i + j == k for i, j, k in triples):
        return identity

    # triples become checkable once their largest vertex is assigned
    by_last: dict[int, list[tuple[int, int, int]]] = {}
    for t in triples:
        by_last.setdefault(max(t), []).append(t)

    sigma = [0] * (p + 1)
    used = [False] * (p + 1)

    def assign(v):
        if v > p:
            return True
        for val in range(1, p + 1):
            if used[val]:
                continue
            sigma[v] = val
            if all(sigma[i] + sigma[j] == sigma[k] for i, j, k in by_last.get(v, ())):
                used[val] = True
                if assign(v + 1):
                    return True
                used[val] = False
        sigma[v] = 0
        return False

    if assign(1):
        return tuple(sigma[1:])
    return None
