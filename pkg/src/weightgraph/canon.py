"""Canonical labeling of small graphs.

Individualization-refinement search: the vertex set is refined to an
equitable ordered partition (the first split is by degree), a vertex of the
first non-singleton cell is individualized, and the process repeats until the
partition is discrete.  Every discrete partition is a vertex ordering; the
canonical form is the ordering whose upper-triangle adjacency bit-string is
lexicographically smallest.  Automorphisms discovered along the way (two
leaves with the same bit-string) prune branches that are images of explored
ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graph import SimpleGraph

CANON_MAX_VERTICES = 10


def _refine(rows, cells):
    """Equitable refinement of an ordered partition (list of vertex lists)."""
    w = 0
    while w < len(cells):
        wmask = 0
        for v in cells[w]:
            wmask |= 1 << v
        new = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((rows[v] & wmask).bit_count(), []).append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                split = True
                for k in sorted(groups):
                    new.append(groups[k])
        cells = new
        # a split can make earlier splitters informative again
        w = 0 if split else w + 1
    return cells


def _key(rows, order):
    p = len(order)
    key = 0
    for i in range(p):
        row = rows[order[i]]
        for j in range(i + 1, p):
            key = (key << 1) | (row >> order[j] & 1)
    return key


def _orbit_roots(autos, p):
    parent = list(range(p))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in autos:
        for x in range(p):
            rx, ry = find(x), find(a[x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(p)]


@dataclass(frozen=True)
class CanonicalResult:
    label: bytes
    order: tuple[int, ...]  # 0-based: order[i] is the vertex placed at position i
    generators: tuple[tuple[int, ...], ...]  # 0-based automorphisms found
    orbits: tuple[int, ...]  # 0-based orbit representative per vertex

    def graph(self, g: SimpleGraph) -> SimpleGraph:
        """The canonical form of ``g`` (vertex at canonical position i becomes i+1)."""
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        rows = g.rows
        out = []
        for v in self.order:
            r = rows[v]
            nr = 0
            while r:
                b = r & -r
                nr |= 1 << pos[b.bit_length() - 1]
                r ^= b
            out.append(nr)
        return SimpleGraph.from_rows(out)


def _label_bytes(p, key):
    nbits = p * (p - 1) // 2
    return bytes([p]) + key.to_bytes((nbits + 7) // 8 or 1, "big")


def canonical_search(g: SimpleGraph) -> CanonicalResult:
    p = g.p
    if p > CANON_MAX_VERTICES:
        raise CapacityError(f"canonical labeling supports p <= {CANON_MAX_VERTICES}, got {p}")
    rows = g.rows
    autos: list[tuple[int, ...]] = []
    state = {"first": None, "first_key": None, "best": None, "best_key": None}

    def automorphism(src, dst):
        a = [0] * p
        for x, y in zip(src, dst):
            a[x] = y
        autos.append(tuple(a))

    def on_first_path(path):
        first = state["first"]
        return first is None or list(first[: len(path)]) == path

    def visit(cells, path):
        """Explore a node; return True if a leaf equivalent to the first leaf was found."""
        cells = _refine(rows, cells)
        if len(cells) == p:
            order = tuple(c[0] for c in cells)
            key = _key(rows, order)
            if state["first"] is None:
                state["first"], state["first_key"] = order, key
                state["best"], state["best_key"] = order, key
                return False
            if key == state["first_key"]:
                automorphism(state["first"], order)
                return True
            if key < state["best_key"]:
                state["best"], state["best_key"] = order, key
            elif key == state["best_key"]:
                automorphism(state["best"], order)
            return False
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        tried: list[int] = []
        first_node = on_first_path(path)
        for v in target:
            if tried:
                stab = [a for a in autos if all(a[x] == x for x in path)]
                if stab:
                    roots = _orbit_roots(stab, p)
                    if any(roots[v] == roots[u] for u in tried):
                        continue
            tried.append(v)
            rest = [u for u in target if u != v]
            child = cells[:t] + [[v], rest] + cells[t + 1:]
            hit = visit(child, path + [v])
            if hit and not first_node:
                return True
        return False

    visit([list(range(p))], [])
    best = state["best"]
    return CanonicalResult(
        label=_label_bytes(p, state["best_key"]),
        order=best,
        generators=tuple(autos),
        orbits=tuple(_orbit_roots(autos, p)),
    )


def canonical_label(g: SimpleGraph) -> bytes:
    """Byte string equal for two graphs with the same p exactly when they are isomorphic."""
    return canonical_search(g).label


def canonical_form(g: SimpleGraph) -> SimpleGraph:
    return canonical_search(g).graph(g)


def automorphism_orbits(g: SimpleGraph) -> list[set[int]]:
    """Vertex orbits of the automorphism group, 1-based, sorted by minimum."""
    res = canonical_search(g)
    groups: dict[int, set[int]] = {}
    for v, r in enumerate(res.orbits):
        groups.setdefault(r, set()).add(v + 1)
    return sorted(groups.values(), key=min)
