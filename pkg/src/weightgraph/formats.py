"""Text formats: edge lists, weight systems, structure constants, and DOT output.

Edge list::

    # comment
    p q
    u v        (q lines, 1 <= u < v <= p)

Weight system: a header ``p r`` followed by p lines of r rationals.
Structure constants: a header ``dim n`` followed by lines ``i j k c`` with
``i < j`` meaning ``[X_i, X_j]`` has coefficient c on X_k.
Rationals are written as integers or ``num/den``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError
from .graph import SimpleGraph, universal_vertices
from .lie import StructureConstants
from .weights import WeightSystem


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {tok!r}", line=lineno) from None


def _rational(tok: str, lineno: int) -> Fraction:
    try:
        if "." in tok or "e" in tok.lower():
            raise ValueError
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"expected an integer or num/den rational, got {tok!r}", line=lineno) from None


def _read(path) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


# -- edge lists ---------------------------------------------------------------

def parse_edge_list(text: str) -> SimpleGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise InputError("empty edge list: expected header 'p q'")
    lineno, head = lines[0]
    if len(head) != 2:
        raise InputError("header must be 'p q'", line=lineno)
    p = _int(head[0], lineno, "p")
    q = _int(head[1], lineno, "q")
    if p < 1:
        raise InputError(f"p must be positive, got {p}", line=lineno)
    if not 0 <= q <= p * (p - 1) // 2:
        raise InputError(f"q={q} impossible for p={p}", line=lineno)
    body = lines[1:]
    if len(body) != q:
        where = body[-1][0] if body else lineno
        raise InputError(f"header declares {q} edges but {len(body)} edge lines follow", line=where)
    seen = set()
    for lineno, toks in body:
        if len(toks) != 2:
            raise InputError("edge line must be 'u v'", line=lineno)
        u = _int(toks[0], lineno, "u")
        v = _int(toks[1], lineno, "v")
        if not (1 <= u < v <= p):
            raise InputError(f"edge '{u} {v}' violates 1 <= u < v <= {p}", line=lineno)
        if (u, v) in seen:
            raise InputError(f"duplicate edge '{u} {v}'", line=lineno)
        seen.add((u, v))
    return SimpleGraph(p, seen)


def format_edge_list(g: SimpleGraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{g.p} {g.q}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_edge_list(path) -> SimpleGraph:
    return parse_edge_list(_read(path))


def write_edge_list(g: SimpleGraph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, comment))


def dump_graphs(graphs: Iterable[SimpleGraph], directory) -> list[str]:
    """Write each graph to ``<directory>/g<index>_q<edges>.txt``; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for idx, g in enumerate(graphs, 1):
        path = os.path.join(directory, f"g{idx:05d}_q{g.q}.txt")
        write_edge_list(g, path)
        paths.append(path)
    return paths


# -- weight systems -------------------------------------------------------------

def parse_weight_system(text: str) -> WeightSystem:
    lines = list(_content_lines(text))
    if not lines:
        raise InputError("empty weight system: expected header 'p r'")
    lineno, head = lines[0]
    if len(head) != 2:
        raise InputError("header must be 'p r'", line=lineno)
    p = _int(head[0], lineno, "p")
    r = _int(head[1], lineno, "r")
    if p < 1 or r < 1:
        raise InputError("p and r must be positive", line=lineno)
    body = lines[1:]
    if len(body) != p:
        raise InputError(f"header declares {p} weights but {len(body)} lines follow",
                         line=body[-1][0] if body else lineno)
    weights = []
    for lineno, toks in body:
        if len(toks) != r:
            raise InputError(f"expected {r} coordinates, got {len(toks)}", line=lineno)
        weights.append([_rational(t, lineno) for t in toks])
    return WeightSystem(weights, rank=r)


def format_weight_system(ws: WeightSystem) -> str:
    out = [f"{ws.p} {ws.rank}"]
    out.extend(" ".join(str(x) for x in w) for w in ws.weights)
    return "\n".join(out) + "\n"


def read_weight_system(path) -> WeightSystem:
    return parse_weight_system(_read(path))


# -- structure constants --------------------------------------------------------

def parse_structure_constants(text: str) -> StructureConstants:
    lines = list(_content_lines(text))
    if not lines:
        raise InputError("empty file: expected header 'dim n'")
    lineno, head = lines[0]
    if len(head) != 2 or head[0] != "dim":
        raise InputError("header must be 'dim n'", line=lineno)
    n = _int(head[1], lineno, "dimension")
    if n < 1:
        raise InputError(f"dimension must be positive, got {n}", line=lineno)
    consts: dict[tuple[int, int, int], Fraction] = {}
    for lineno, toks in lines[1:]:
        if len(toks) != 4:
            raise InputError("constant line must be 'i j k c'", line=lineno)
        i, j, k = (_int(t, lineno, "index") for t in toks[:3])
        if not (1 <= i <= n and 1 <= j <= n and 1 <= k <= n):
            raise InputError(f"index out of range 1..{n}", line=lineno)
        if i >= j:
            raise InputError(f"need i < j, got i={i} j={j}", line=lineno)
        if (i, j, k) in consts:
            raise InputError(f"constant ({i},{j},{k}) given twice", line=lineno)
        consts[(i, j, k)] = _rational(toks[3], lineno)
    return StructureConstants(n, consts)


def format_structure_constants(alg: StructureConstants) -> str:
    out = [f"dim {alg.n}"]
    out.extend(f"{i} {j} {k} {v}" for (i, j, k), v in sorted(alg.c.items()))
    return "\n".join(out) + "\n"


def read_structure_constants(path) -> StructureConstants:
    return parse_structure_constants(_read(path))


# -- DOT ------------------------------------------------------------------------

def _fmt_weight(w: Sequence) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def to_dot(g: SimpleGraph, name: str = "G", weights: WeightSystem | None = None) -> str:
    """Undirected DOT text; universal vertices are filled, weights go into labels."""
    uni = universal_vertices(g)
    out = [f'graph "{name}" {{', "  node [shape=circle];"]
    for v in range(1, g.p + 1):
        attrs = []
        if weights is not None:
            attrs.append(f'label="p{v}\\n{_fmt_weight(weights.weights[v - 1])}"')
        else:
            attrs.append(f'label="p{v}"')
        if v in uni:
            attrs.append('style=filled, fillcolor="lightcoral"')
        out.append(f"  p{v} [{', '.join(attrs)}];")
    for u, v in g.edges:
        out.append(f"  p{u} -- p{v};")
    out.append("}")
    return "\n".join(out) + "\n"


def write_dot(g: SimpleGraph, path, name: str = "G", weights: WeightSystem | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_dot(g, name, weights))
