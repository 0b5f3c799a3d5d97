"""Nilpotent Lie algebras given by rational structure constants.

The bracket on the basis X_1..X_n is ``[X_i, X_j] = sum_k c[i, j, k] X_k``
for ``i < j``; antisymmetry supplies ``[X_j, X_i]`` and ``[X_i, X_i] = 0``.

Only tori that are diagonal in the given basis are computed.  For algebras
presented in a basis of weight vectors these realize the maximal torus; for
arbitrary bases the reported rank is merely that of the diagonal torus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .errors import InputError, RepeatedWeights
from .linalg import Matrix, nullspace, rank, row_space_basis, to_fraction
from .weights import WeightSystem, sum_triples


class StructureConstants:
    """Dimension plus the nonzero constants ``c[(i, j, k)]`` with ``i < j`` (1-based)."""

    def __init__(self, n: int, constants: Mapping[tuple[int, int, int], object] = None):
        if not isinstance(n, int) or n < 1:
            raise InputError(f"dimension must be a positive integer, got {n!r}")
        self.n = n
        c: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), val in (constants or {}).items():
            if not (1 <= i <= n and 1 <= j <= n and 1 <= k <= n):
                raise InputError(f"index out of range 1..{n} in c[{i},{j},{k}]")
            if i >= j:
                raise InputError(f"constants must have i < j, got c[{i},{j},{k}]")
            val = to_fraction(val)
            if val != 0:
                c[(i, j, k)] = val
        self.c = c
        # table[i][j] -> sparse dict k -> value, 0-based, antisymmetric
        table = [[{} for _ in range(n)] for _ in range(n)]
        for (i, j, k), val in c.items():
            table[i - 1][j - 1][k - 1] = val
            table[j - 1][i - 1][k - 1] = -val
        self._table = table

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[X_i, X_j] as a sparse 0-based coefficient dict (``i``, ``j`` 0-based)."""
        return self._table[i][j]

    def bracket(self, u, v) -> list[Fraction]:
        """Bracket of two coordinate vectors."""
        out = [Fraction(0)] * self.n
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                for k, val in self._table[i][j].items():
                    out[k] += a * b * val
        return out

    def ad(self, i: int) -> Matrix:
        """Matrix of ad X_i (0-based ``i``) acting on coordinate columns."""
        m = [[Fraction(0)] * self.n for _ in range(self.n)]
        for j in range(self.n):
            for k, val in self._table[i][j].items():
                m[k][j] = val
        return m

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __repr__(self):
        return f"StructureConstants({self.n}, {self.c!r})"


def _unit(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def jacobi_violations(alg: StructureConstants) -> list[tuple[int, int, int]]:
    """Basis triples ``i < j < k`` (1-based) on which the Jacobi identity fails."""
    n = alg.n
    bad = []
    for i, j, k in combinations(range(n), 3):
        xi, xj, xk = _unit(n, i), _unit(n, j), _unit(n, k)
        t1 = alg.bracket(alg.bracket(xi, xj), xk)
        t2 = alg.bracket(alg.bracket(xj, xk), xi)
        t3 = alg.bracket(alg.bracket(xk, xi), xj)
        if any(a + b + c != 0 for a, b, c in zip(t1, t2, t3)):
            bad.append((i + 1, j + 1, k + 1))
    return bad


def lower_central_series(alg: StructureConstants) -> list[int]:
    """Dimensions of C^1 = g, C^{k+1} = [g, C^k], stopping at zero or at the first repeat."""
    n = alg.n
    basis = [_unit(n, i) for i in range(n)]
    dims = [n]
    while dims[-1] > 0:
        spans = [alg.bracket(_unit(n, i), v) for i in range(n) for v in basis]
        basis = row_space_basis(spans, n)
        if len(basis) == dims[-1]:
            break
        dims.append(len(basis))
    return dims


def is_nilpotent(alg: StructureConstants) -> bool:
    return lower_central_series(alg)[-1] == 0


@dataclass
class ValidationReport:
    jacobi_violations: list[tuple[int, int, int]]
    series: list[int]

    @property
    def jacobi_ok(self) -> bool:
        return not self.jacobi_violations

    @property
    def nilpotent(self) -> bool:
        return self.series[-1] == 0

    @property
    def ok(self) -> bool:
        return self.jacobi_ok and self.nilpotent


def validate(alg: StructureConstants) -> ValidationReport:
    return ValidationReport(jacobi_violations(alg), lower_central_series(alg))


def center(alg: StructureConstants) -> Matrix:
    """Basis of the center: vectors killed by every ad X_j, stacked into one system."""
    n = alg.n
    # [v, X_j] = -ad(X_j) v, so the center is the common kernel of all ad X_j
    stacked = [row for j in range(n) for row in alg.ad(j)]
    return row_space_basis(nullspace(stacked, n), n)


@dataclass
class TorusDescription:
    """Diagonal derivations of an algebra in its given basis.

    ``basis`` holds the solution vectors (each a diagonal, length n) in
    reduced row-echelon form; ``weight_matrix[i]`` is the weight of X_{i+1}.
    """

    n: int
    rank: int
    basis: Matrix
    constraints: Matrix = field(repr=False, default_factory=list)

    @property
    def weight_matrix(self) -> Matrix:
        return [[vec[i] for vec in self.basis] for i in range(self.n)]


def derivation_constraints(alg: StructureConstants) -> Matrix:
    """One row ``e_i + e_j - e_k`` for each nonzero constant c[i, j, k]."""
    n = alg.n
    rows = []
    for i, j, k in sorted(alg.c):
        row = [Fraction(0)] * n
        row[i - 1] += 1
        row[j - 1] += 1
        row[k - 1] -= 1
        rows.append(row)
    return rows


def diagonal_torus(alg: StructureConstants) -> TorusDescription:
    n = alg.n
    cons = derivation_constraints(alg)
    sol = row_space_basis(nullspace(cons, n), n)
    return TorusDescription(n=n, rank=len(sol), basis=sol, constraints=cons)


def weight_system_of(alg: StructureConstants, torus: TorusDescription | None = None) -> WeightSystem:
    """Weights of the diagonal torus; raises :class:`RepeatedWeights` on collisions."""
    if torus is None:
        torus = diagonal_torus(alg)
    return WeightSystem(torus.weight_matrix, rank=torus.rank)


def repeated_weight_pairs(torus: TorusDescription) -> list[tuple[int, int]]:
    try:
        WeightSystem(torus.weight_matrix, rank=torus.rank)
    except RepeatedWeights as exc:
        return exc.pairs
    return []


def check_condition1(alg: StructureConstants, ws: WeightSystem) -> tuple[bool, list[tuple[int, int, int]]]:
    """Every relation weight_i + weight_j = weight_k must come with c[i, j, k] != 0.

    Returns (verdict, violating triples).
    """
    bad = [(i, j, k) for i, j, k in sum_triples(ws) if alg.c.get((i, j, k), 0) == 0]
    return not bad, bad


def is_derivation(alg: StructureConstants, diag) -> bool:
    """Check D[X_i, X_j] == [D X_i, X_j] + [X_i, D X_j] for the diagonal map D."""
    n = alg.n
    d = [to_fraction(x) for x in diag]
    for i in range(n):
        for j in range(n):
            br = alg.bracket(_unit(n, i), _unit(n, j))
            lhs = [d[k] * br[k] for k in range(n)]
            dxi = [Fraction(0)] * n
            dxi[i] = d[i]
            dxj = [Fraction(0)] * n
            dxj[j] = d[j]
            a = alg.bracket(dxi, _unit(n, j))
            b = alg.bracket(_unit(n, i), dxj)
            if any(lhs[k] != a[k] + b[k] for k in range(n)):
                return False
    return True


def constraint_rank(alg: StructureConstants) -> int:
    cons = derivation_constraints(alg)
    return rank(cons, alg.n) if cons else 0
