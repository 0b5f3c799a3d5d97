"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Nothing here
uses floating point, so rank and equality decisions are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or a 'num/den' string")
    return Fraction(x)


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[to_fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form with unit pivots; returns (nonzero rows, pivot columns)."""
    m = as_matrix(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        if lead != 1:
            m[r] = [x / lead for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of ``{x : A x = 0}`` with one vector per free column.

    Vector for free column f has a 1 in position f, zeros in the other free
    positions, and the negated reduced entries in the pivot positions.
    """
    red, pivots = rref(rows, ncols) if rows else ([], [])
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def row_space_basis(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Canonical (RREF) basis of the span of ``rows``."""
    if not rows:
        return []
    return rref(rows, ncols)[0]


def mat_vec(a: Matrix, x: Sequence[Fraction]) -> list[Fraction]:
    return [sum((r * v for r, v in zip(row, x)), Fraction(0)) for row in a]
