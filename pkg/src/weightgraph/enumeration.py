"""Isomorph-free enumeration of small graphs and the candidate filter pipeline.

Up to ``LABELED_MAX`` vertices every labeled graph is generated and
deduplicated by canonical label.  Beyond that, graphs are grown one vertex
at a time from the classes on p-1 vertices: a child is kept only when its
new vertex lies in the automorphism orbit of the vertex its canonical
labeling puts last, so each class has exactly one accepted parent class.
Children of the same parent are deduplicated locally.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable

from .canon import canonical_search
from .criteria import check_weight_graph, min_edges, naive_min_edges
from .errors import CapacityError, DomainError
from .graph import (
    SimpleGraph,
    complement,
    diameter,
    is_connected,
    isolated_vertices,
    power,
    universal_vertices,
)

ENUM_MAX = 8
LABELED_MAX = 6

# Elimination count for p=6 as published alongside the sharp edge bound;
# the counting convention behind it is not stated.
PUBLISHED_ELIMINATION = {6: 66}

Entry = tuple[bytes, SimpleGraph]


def _labeled_classes(p: int) -> list[Entry]:
    pairs = list(combinations(range(p), 2))
    seen: dict[bytes, SimpleGraph] = {}
    for mask in range(1 << len(pairs)):
        rows = [0] * p
        for b, (u, v) in enumerate(pairs):
            if mask >> b & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = SimpleGraph.from_rows(rows)
        res = canonical_search(g)
        if res.label not in seen:
            seen[res.label] = res.graph(g)
    return list(seen.items())


def _children(parent: SimpleGraph) -> list[Entry]:
    """Canonically accepted one-vertex extensions of a parent class representative."""
    base = list(parent.rows)
    m = parent.p
    new = m
    local: dict[bytes, SimpleGraph] = {}
    for subset in range(1 << m):
        rows = [r | ((subset >> i & 1) << new) for i, r in enumerate(base)]
        rows.append(subset)
        child = SimpleGraph.from_rows(rows)
        res = canonical_search(child)
        if res.orbits[new] != res.orbits[res.order[-1]]:
            continue
        if res.label not in local:
            local[res.label] = res.graph(child)
    return list(local.items())


def _children_batch(parents: list[SimpleGraph]) -> list[Entry]:
    out = []
    for g in parents:
        out.extend(_children(g))
    return out


def _sort_key(entry: Entry):
    label, g = entry
    return g.q, label


@lru_cache(maxsize=None)
def _classes(p: int, workers: int = 1) -> tuple[Entry, ...]:
    if p <= LABELED_MAX:
        found = _labeled_classes(p)
    else:
        parents = [g for _, g in _classes(p - 1, workers)]
        if workers > 1:
            chunks = [parents[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                found = [e for part in pool.map(_children_batch, chunks) for e in part]
        else:
            found = _children_batch(parents)
        labels = [label for label, _ in found]
        if len(set(labels)) != len(labels):
            raise AssertionError(f"orderly generation produced a duplicate class at p={p}")
    return tuple(sorted(found, key=_sort_key))


def _check_p(p: int, lo: int = 1) -> None:
    if p > ENUM_MAX:
        raise CapacityError(f"enumeration supports p <= {ENUM_MAX}, got {p}")
    if p < lo:
        raise DomainError(f"p must be at least {lo}, got {p}")


def enumerate_graphs(p: int, filter: Callable[[SimpleGraph], bool] | None = None,
                     workers: int = 1) -> list[SimpleGraph]:
    """One canonical representative per isomorphism class on p vertices.

    Ordered by edge count, then canonical label.  ``filter`` keeps only the
    classes whose representative satisfies it.
    """
    _check_p(p)
    graphs = [g for _, g in _classes(p, workers)]
    if filter is not None:
        graphs = [g for g in graphs if filter(g)]
    return graphs


STAGES: tuple[tuple[str, Callable[[SimpleGraph], bool]], ...] = (
    ("connected", is_connected),
    ("universal_vertex", lambda g: bool(universal_vertices(g))),
    ("diameter_le_2", lambda g: diameter(g) <= 2),
    ("power_idempotent", lambda g: power(g, 2) == power(g, 3) == power(g, 4)),
    ("edge_lower_bound", lambda g: g.q >= min_edges(g.p)),
)


def pipeline_survivors(p: int, graphs: list[SimpleGraph] | None = None) -> list[tuple[str, list[SimpleGraph]]]:
    """Survivors after each cumulative stage, starting with ``("all", every class)``."""
    _check_p(p, 3)
    current = enumerate_graphs(p) if graphs is None else list(graphs)
    out = [("all", current)]
    for name, pred in STAGES:
        current = [g for g in current if pred(g)]
        out.append((name, current))
    return out


def filter_pipeline(p: int) -> list[tuple[str, int]]:
    return [(name, len(gs)) for name, gs in pipeline_survivors(p)]


@dataclass
class EnumerationReport:
    p: int
    total_graphs: int
    connected_graphs: int
    histogram: dict[int, int]
    connected_histogram: dict[int, int]
    candidates_naive: int
    candidates_strict: int
    eliminated_by_bound: int
    naive_bound: int
    sharp_bound: int
    stages: list[tuple[str, int]] = field(default_factory=list)
    published: int | None = None

    @property
    def agreement(self) -> str | None:
        if self.published is None:
            return None
        return "agree" if self.published == self.eliminated_by_bound else "disagree"

    def keyvalue_lines(self) -> list[str]:
        out = [
            f"p={self.p}",
            f"naive_min_edges={self.naive_bound}",
            f"min_edges={self.sharp_bound}",
            f"total_graphs={self.total_graphs}",
            f"connected_graphs={self.connected_graphs}",
            f"candidates_naive={self.candidates_naive}",
            f"candidates_strict={self.candidates_strict}",
            f"eliminated_by_bound={self.eliminated_by_bound}",
            f"eliminated_by_bound.convention=connected classes with {self.naive_bound} <= q <= {self.sharp_bound - 1}",
        ]
        if self.published is not None:
            out.append(f"eliminated_by_bound.published={self.published}")
            out.append(f"eliminated_by_bound.agreement={self.agreement}")
        for q in sorted(self.histogram):
            out.append(f"histogram.q{q}={self.histogram[q]}")
        for q in sorted(self.connected_histogram):
            out.append(f"connected_histogram.q{q}={self.connected_histogram[q]}")
        for name, count in self.stages:
            out.append(f"stage.{name}={count}")
        return out

    def text_lines(self) -> list[str]:
        out = [
            f"graphs on p={self.p} vertices (up to isomorphism)",
            f"  total classes               {self.total_graphs}",
            f"  connected classes           {self.connected_graphs}",
            f"  naive edge bound  q >= {self.naive_bound:<4} {self.candidates_naive} connected candidates",
            f"  sharp edge bound  q >= {self.sharp_bound:<4} eliminates {self.eliminated_by_bound}",
            f"    (convention: connected classes with {self.naive_bound} <= q <= {self.sharp_bound - 1})",
        ]
        if self.published is not None:
            out.append(f"    published elimination count {self.published}: {self.agreement}")
        out.append(f"  pass every necessary check  {self.candidates_strict}")
        out.append("")
        out.append("  q   all  connected")
        for q in sorted(self.histogram):
            out.append(f"  {q:<3} {self.histogram[q]:<4} {self.connected_histogram.get(q, 0)}")
        out.append("")
        out.append("  filter stage        survivors")
        for name, count in self.stages:
            out.append(f"  {name:<19} {count}")
        return out


def candidate_report(p: int) -> EnumerationReport:
    _check_p(p, 3)
    graphs = enumerate_graphs(p)
    connected = [g for g in graphs if is_connected(g)]
    hist: dict[int, int] = {}
    for g in graphs:
        hist[g.q] = hist.get(g.q, 0) + 1
    chist: dict[int, int] = {}
    for g in connected:
        chist[g.q] = chist.get(g.q, 0) + 1
    naive, sharp = naive_min_edges(p), min_edges(p)
    cand_naive = [g for g in connected if g.q >= naive]
    eliminated = sum(1 for g in cand_naive if g.q < sharp)
    strict = sum(1 for g in connected if check_weight_graph(g).overall)
    return EnumerationReport(
        p=p,
        total_graphs=len(graphs),
        connected_graphs=len(connected),
        histogram=hist,
        connected_histogram=chist,
        candidates_naive=len(cand_naive),
        candidates_strict=strict,
        eliminated_by_bound=eliminated,
        naive_bound=naive,
        sharp_bound=sharp,
        stages=filter_pipeline(p),
        published=PUBLISHED_ELIMINATION.get(p),
    )


def has_isolated_in_complement(g: SimpleGraph) -> bool:
    return bool(isolated_vertices(complement(g)))
