"""End-to-end analysis of an algebra: from structure constants to weight graph checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .criteria import CriteriaReport, check_weight_graph
from .graph import SimpleGraph, complement, isolated_vertices
from .lie import (
    StructureConstants,
    TorusDescription,
    center,
    check_condition1,
    diagonal_torus,
    jacobi_violations,
    lower_central_series,
    repeated_weight_pairs,
)
from .weights import WeightSystem, raw_graph, self_sums, sum_triples


def _vec(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def _edges(g: SimpleGraph) -> str:
    return ",".join(f"{u}-{v}" for u, v in g.edges) or "none"


def _verts(vs) -> str:
    return ",".join(str(v) for v in sorted(vs)) or "none"


@dataclass
class AlgebraReport:
    n: int
    jacobi_violations: list[tuple[int, int, int]]
    series: list[int]
    center_dim: int | None = None
    torus: TorusDescription | None = None
    repeated: list[tuple[int, int]] = field(default_factory=list)
    weights: WeightSystem | None = None
    triples: list[tuple[int, int, int]] = field(default_factory=list)
    doubled: list[tuple[int, int]] = field(default_factory=list)
    raw: SimpleGraph | None = None
    graph: SimpleGraph | None = None
    condition1: bool | None = None
    condition1_witnesses: list[tuple[int, int, int]] = field(default_factory=list)
    criteria: CriteriaReport | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def nilpotent(self) -> bool:
        return self.series[-1] == 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def items(self) -> list[tuple[str, str]]:
        """Every datum of the report as ordered (key, value) pairs."""
        out = [
            ("dim", str(self.n)),
            ("jacobi", "ok" if not self.jacobi_violations else
             "fails on " + ";".join(_vec(t) for t in self.jacobi_violations)),
            ("series", ",".join(map(str, self.series))),
            ("nilpotent", "yes" if self.nilpotent else "no"),
        ]
        if self.center_dim is not None:
            out.append(("center_dim", str(self.center_dim)))
        if self.torus is not None:
            out.append(("torus_rank", str(self.torus.rank)))
            for i, row in enumerate(self.torus.weight_matrix, 1):
                out.append((f"weight.{i}", _vec(row)))
        if self.repeated:
            out.append(("repeated_weights", ";".join(f"{i}={j}" for i, j in self.repeated)))
        if self.weights is not None:
            out.append(("sum_triples", ";".join(_vec(t) for t in self.triples) or "none"))
            if self.doubled:
                out.append(("doubled_weights", ";".join(f"2*{i}={k}" for i, k in self.doubled)))
            out.append(("raw_graph.edges", _edges(self.raw)))
            out.append(("raw_graph.isolated", _verts(isolated_vertices(self.raw))))
            out.append(("weight_graph.edges", _edges(self.graph)))
            out.append(("sum_bracket_condition", "pass" if self.condition1 else
                        "fail " + ";".join(_vec(t) for t in self.condition1_witnesses)))
        if self.criteria is not None:
            for line in self.criteria.keyvalue_lines():
                k, v = line.split("=", 1)
                out.append((f"criteria.{k}", v))
        out.append(("status", "ok" if self.ok else "fail"))
        for i, msg in enumerate(self.failures, 1):
            out.append((f"failure.{i}", msg))
        return out

    def keyvalue_lines(self) -> list[str]:
        return [f"{k}={v}" for k, v in self.items()]

    def text_lines(self) -> list[str]:
        out = [f"Lie algebra of dimension {self.n}"]
        out.append(f"  Jacobi identity          {'holds' if not self.jacobi_violations else 'FAILS'}")
        for t in self.jacobi_violations:
            out.append(f"    violated on basis triple {_vec(t)}")
        out.append(f"  lower central series     {' > '.join(map(str, self.series))}")
        out.append(f"  nilpotent                {'yes' if self.nilpotent else 'no'}")
        if self.center_dim is not None:
            out.append(f"  center dimension         {self.center_dim}")
        if self.torus is not None:
            out.append(f"  diagonal torus rank      {self.torus.rank}")
            out.append("  weights")
            for i, row in enumerate(self.torus.weight_matrix, 1):
                out.append(f"    X{i:<3} {_vec(row)}")
        if self.repeated:
            out.append("  repeated weights         " + ", ".join(f"X{i} = X{j}" for i, j in self.repeated))
        if self.weights is not None:
            tri = ", ".join(f"a{i}+a{j}=a{k}" for i, j, k in self.triples) or "none"
            out.append(f"  weight sums              {tri}")
            if self.doubled:
                out.append("  doubled weights (no edge) " + ", ".join(f"2a{i}=a{k}" for i, k in self.doubled))
            out.append(f"  raw graph edges          {_edges(self.raw)}")
            out.append(f"  raw graph isolated       {_verts(isolated_vertices(self.raw))}")
            out.append(f"  weight graph edges       {_edges(self.graph)}")
            verdict = "holds" if self.condition1 else \
                "FAILS on " + ", ".join(_vec(t) for t in self.condition1_witnesses)
            out.append(f"  sum/bracket condition    {verdict}")
        if self.criteria is not None:
            out.append("")
            out.append("weight graph checks")
            out.extend("  " + line for line in self.criteria.text_lines())
        out.append("")
        if self.ok:
            out.append("status: ok")
        else:
            out.append("status: fail")
            out.extend(f"  - {msg}" for msg in self.failures)
        return out


def analyze_algebra(alg: StructureConstants) -> AlgebraReport:
    """Run the full pipeline, stopping at the first stage whose hypothesis fails."""
    rep = AlgebraReport(n=alg.n, jacobi_violations=jacobi_violations(alg),
                        series=lower_central_series(alg))
    if rep.jacobi_violations:
        rep.failures.append("Jacobi identity fails: not a Lie algebra")
        return rep
    if not rep.nilpotent:
        rep.failures.append("not nilpotent: lower central series stabilizes at dimension "
                            f"{rep.series[-1]}")
        return rep
    rep.center_dim = len(center(alg))
    rep.torus = diagonal_torus(alg)
    rep.repeated = repeated_weight_pairs(rep.torus)
    if rep.repeated:
        rep.failures.append("repeated weights: some weight space is not one-dimensional")
        return rep
    ws = WeightSystem(rep.torus.weight_matrix, rank=rep.torus.rank)
    rep.weights = ws
    rep.triples = sum_triples(ws)
    rep.doubled = self_sums(ws)
    rep.raw = raw_graph(ws)
    rep.graph = complement(rep.raw)
    rep.condition1, rep.condition1_witnesses = check_condition1(alg, ws)
    if not rep.condition1:
        rep.failures.append("a weight sum has a vanishing bracket")
    rep.criteria = check_weight_graph(rep.graph)
    if not rep.criteria.overall:
        rep.failures.append("weight graph fails: " + ", ".join(c.name for c in rep.criteria.failed()))
    return rep
