"""Small library of nilpotent Lie algebras used as test and demo inputs."""

from __future__ import annotations

from .lie import StructureConstants


def abelian(n: int) -> StructureConstants:
    return StructureConstants(n, {})


def heisenberg(m: int = 1) -> StructureConstants:
    """Heisenberg algebra of dimension 2m+1: [X_{2i-1}, X_{2i}] = X_{2m+1}."""
    n = 2 * m + 1
    return StructureConstants(n, {(2 * i - 1, 2 * i, n): 1 for i in range(1, m + 1)})


def filiform(n: int) -> StructureConstants:
    """Model filiform algebra L_n: [X_1, X_i] = X_{i+1} for 2 <= i <= n-1."""
    if n < 3:
        raise ValueError(f"filiform algebras need n >= 3, got {n}")
    return StructureConstants(n, {(1, i, i + 1): 1 for i in range(2, n)})


def direct_sum(a: StructureConstants, b: StructureConstants) -> StructureConstants:
    """a + b with b's basis shifted to follow a's."""
    c = dict(a.c)
    s = a.n
    for (i, j, k), v in b.c.items():
        c[(i + s, j + s, k + s)] = v
    return StructureConstants(a.n + b.n, c)


def corpus() -> dict[str, StructureConstants]:
    """Named algebras: a1..a6, h3, h5, L3..L10 and two direct sums."""
    out = {f"a{n}": abelian(n) for n in range(1, 7)}
    out["h3"] = heisenberg(1)
    out["h5"] = heisenberg(2)
    for n in range(3, 11):
        out[f"L{n}"] = filiform(n)
    out["h3+a1"] = direct_sum(heisenberg(1), abelian(1))
    out["h3+h3"] = direct_sum(heisenberg(1), heisenberg(1))
    return out
