"""Finitely generated abelian groups in Smith normal form.

Canonical names: torsion factors in divisibility order, then the free part,
joined with " x " — e.g. "Z_2 x Z", "Z_2 x Z_4", "Z^2"; the trivial group
prints as "0" (these strings are compared verbatim by reports and tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..exactnum import intmat


def abelian_name(torsion: tuple[int, ...], free_rank: int) -> str:
    parts = [f"Z_{d}" for d in torsion]
    if free_rank == 1:
        parts.append("Z")
    elif free_rank > 1:
        parts.append(f"Z^{free_rank}")
    return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class FgAbelian:
    """Invariant-factor form: torsion d1 | d2 | ... (each > 1) plus Z^rank."""

    torsion: tuple[int, ...]
    free_rank: int

    @property
    def name(self) -> str:
        return abelian_name(self.torsion, self.free_rank)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n


def cokernel(columns: list[list[int]], ambient_rank: int) -> FgAbelian:
    """Z^ambient_rank / (integer span of the given column vectors)."""
    if not columns:
        return FgAbelian(torsion=(), free_rank=ambient_rank)
    rows = [[col[i] for col in columns] for i in range(ambient_rank)]
    diag = _snf_diagonal(rows)
    torsion = tuple(d for d in diag if d > 1)
    rank = sum(1 for d in diag if d != 0)
    return FgAbelian(torsion=torsion, free_rank=ambient_rank - rank)


def cokernel_mod(columns: list[list[int]], ambient_rank: int,
                 m: int) -> FgAbelian:
    """(Z_m)^ambient_rank / image, from the integer Smith form."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    if m == 1:
        return FgAbelian(torsion=(), free_rank=0)
    if not columns:
        return FgAbelian(torsion=(m,) * ambient_rank, free_rank=0)
    rows = [[col[i] for col in columns] for i in range(ambient_rank)]
    diag = _snf_diagonal(rows)
    torsion = []
    for d in diag:
        t = gcd(d, m) if d else m
        if t > 1:
            torsion.append(t)
    torsion.extend([m] * (ambient_rank - len(diag)))
    return FgAbelian(torsion=tuple(sorted(torsion)), free_rank=0)


def tensor_power(g: FgAbelian, n: int) -> FgAbelian:
    """G^n for an fg abelian G in invariant-factor form."""
    return FgAbelian(torsion=tuple(sorted(g.torsion * n)),
                     free_rank=g.free_rank * n)


def _snf_diagonal(rows: list[list[int]]) -> list[int]:
    """Nonzero Smith-form diagonal entries, in divisibility order."""
    if not rows or not rows[0]:
        return []
    return [abs(d) for d in intmat.snf_diagonal(rows) if d != 0]
