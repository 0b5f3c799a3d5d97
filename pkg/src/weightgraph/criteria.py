"""Necessary conditions for a graph to be a weight graph, and the edge-bound calculus."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import DomainError
from .graph import (
    INFINITY,
    SimpleGraph,
    components,
    distance_matrix,
    power,
    universal_vertices,
)
from .weights import max_weight_sums

BOUND_TABLE_MAX = 64

CHECK_NAMES = (
    "connected",
    "universal_vertex",
    "diameter_le_2",
    "power_idempotent",
    "edge_lower_bound",
)


def naive_min_edges(p: int) -> int:
    """Lower bound on edges from the existence of one universal vertex."""
    if p < 1:
        raise DomainError(f"p must be positive, got {p}")
    return p - 1


def min_edges(p: int) -> int:
    """Sharp lower bound: all pairs minus the most index sums a weight system can realize."""
    return comb(p, 2) - max_weight_sums(p)


def f(p: int) -> int:
    """Gap between the sharp and the naive edge bounds, defined for p >= 3."""
    if p < 3:
        raise DomainError(f"f is defined for p >= 3, got {p}")
    return comb(p, 2) - (p - 1) - max_weight_sums(p)


def f_difference(p: int, k: int) -> int:
    """Closed form of f(p+k) - f(p)."""
    if p < 3:
        raise DomainError(f"f is defined for p >= 3, got {p}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return k * (p - 1) + k * (k - 1) // 2 - sum((p + j) // 2 for j in range(k))


def f_step(p: int) -> int:
    """Closed form of f(p+1) - f(p)."""
    if p < 3:
        raise DomainError(f"f is defined for p >= 3, got {p}")
    return p - 1 - p // 2


@dataclass(frozen=True)
class BoundRow:
    p: int
    naive: int
    sums: int
    sharp: int
    f: int
    margin: int | None  # f(p) - (p + 1), only reported for p >= 8


def bound_table(max_p: int) -> list[BoundRow]:
    if not 3 <= max_p <= BOUND_TABLE_MAX:
        raise DomainError(f"max p must lie in 3..{BOUND_TABLE_MAX}, got {max_p}")
    rows = []
    for p in range(3, max_p + 1):
        fp = f(p)
        rows.append(BoundRow(p, naive_min_edges(p), max_weight_sums(p), min_edges(p), fp,
                             fp - (p + 1) if p >= 8 else None))
    return rows


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str = ""


@dataclass
class CriteriaReport:
    p: int
    q: int
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def keyvalue_lines(self) -> list[str]:
        out = [f"p={self.p}", f"q={self.q}"]
        for c in self.checks:
            out.append(f"check.{c.name}={'pass' if c.passed else 'fail'}")
            if c.witness:
                out.append(f"witness.{c.name}={c.witness}")
        out.append(f"overall={'pass' if self.overall else 'fail'}")
        return out

    def text_lines(self) -> list[str]:
        width = max(len(n) for n in CHECK_NAMES)
        out = [f"graph: p={self.p} q={self.q}", f"{'check':<{width}}  result  witness"]
        for c in self.checks:
            out.append(f"{c.name:<{width}}  {'pass' if c.passed else 'FAIL':<6}  {c.witness}".rstrip())
        out.append(f"{'overall':<{width}}  {'pass' if self.overall else 'FAIL'}")
        return out


def _far_pair(dist, limit):
    """First pair (1-based) at distance greater than ``limit``, with that distance."""
    n = len(dist)
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i][j] > limit:
                return i + 1, j + 1, dist[i][j]
    return None


def _fmt_dist(d):
    return "inf" if d == INFINITY else str(d)


def power_fixed(g: SimpleGraph, n: int = 2) -> bool:
    """Literal test of ``G == G^n``.  Among connected graphs only complete graphs pass."""
    return power(g, n) == g


def check_weight_graph(g: SimpleGraph) -> CriteriaReport:
    """Evaluate every necessary condition on ``g`` and collect witnesses for failures.

    ``power_idempotent`` tests that the power sequence is stationary from
    the square on (``G^2 == G^3 == G^4``).  The literal ``G == G^2`` holds for
    no connected non-complete graph, including genuine weight graphs such as
    the one of the 3-dimensional Heisenberg algebra; see :func:`power_fixed`.
    """
    p, q = g.p, g.q
    rep = CriteriaReport(p, q)
    dist = distance_matrix(g)

    comps = components(g)
    if len(comps) == 1:
        rep.checks.append(Check("connected", True))
    else:
        rep.checks.append(Check("connected", False,
                                f"{len(comps)} components, e.g. {{{comps[0][0]}}} and {{{comps[1][0]}}}"))

    uni = universal_vertices(g)
    if uni:
        rep.checks.append(Check("universal_vertex", True, ""))
    else:
        degs = g.degrees()
        top = max(range(p), key=lambda i: (degs[i], -i))
        rep.checks.append(Check("universal_vertex", False,
                                f"max degree {degs[top]} < {p - 1} (vertex {top + 1})"))

    far = _far_pair(dist, 2)
    if far is None:
        rep.checks.append(Check("diameter_le_2", True))
    else:
        u, v, d = far
        rep.checks.append(Check("diameter_le_2", False, f"d({u},{v})={_fmt_dist(d)}"))

    g2 = power(g, 2)
    bad = None
    for n in (3, 4):
        gn = power(g, n)
        if gn != g2:
            extra = sorted(set(gn.edges) - set(g2.edges))[0]
            bad = f"G^2 != G^{n}: edge {{{extra[0]},{extra[1]}}} appears at distance {n}"
            break
    rep.checks.append(Check("power_idempotent", bad is None, bad or ""))

    bound = min_edges(p)
    rep.checks.append(Check("edge_lower_bound", q >= bound, "" if q >= bound else f"q={q}<{bound}"))
    return rep
