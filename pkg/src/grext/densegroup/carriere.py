"""The hyperbolic-toral solvable family inside the affine group of the line.

For A in SL(2, Z) with trace > 2, the eigenvalues are a pair of positive
quadratic units lam1 < 1 < lam2 with lam1 * lam2 = det A = 1, and Z acts on
Z^2 through A.  The semidirect product Z ltimes_A Z^2 embeds in the group
GA = {x -> a x + b : a > 0} of orientation-preserving affine maps of R:
the Z generator goes to the homothety x -> lam1 * x and the two eigenvector
generators go to translations.  Conjugating a translation by the homothety
scales its translation part by lam1 — exactly, in Q(sqrt(disc)).

Everything here is exact field arithmetic; the GA pairs (a, b) in the
generator dictionary are consumed by the groupoid-algebra module's affine
word evaluator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import NotSL2, TraceTooSmall
from ..exactnum.field import FieldElement, NumberField

IntMatrix = tuple[tuple[int, int], tuple[int, int]]
GAWord = tuple[FieldElement, FieldElement]          # (a, b): x -> a x + b


@dataclass(frozen=True)
class CarriereReport:
    """Exact spectral data of A and its affine-group generator dictionary."""

    matrix: IntMatrix
    trace: int
    disc: int
    field: NumberField
    lam1: FieldElement            # smaller eigenvalue, 0 < lam1 < 1
    lam2: FieldElement            # larger eigenvalue, lam2 = 1/lam1 > 1
    v1: tuple[FieldElement, FieldElement]
    v2: tuple[FieldElement, FieldElement]
    dictionary: dict[str, GAWord]
    verified: bool

    def serialize(self) -> dict:
        return {
            "matrix": [list(r) for r in self.matrix],
            "trace": self.trace,
            "disc": self.disc,
            "lam1": self.lam1.serialize(),
            "lam2": self.lam2.serialize(),
            "v1": [c.serialize() for c in self.v1],
            "v2": [c.serialize() for c in self.v2],
            "dictionary": {k: [v[0].serialize(), v[1].serialize()]
                           for k, v in sorted(self.dictionary.items())},
            "verified": self.verified,
        }


def carriere_family(a: IntMatrix) -> CarriereReport:
    """Exact eigen-data and GA dictionary for a hyperbolic A in SL(2, Z)."""
    rows = tuple(tuple(int(x) for x in r) for r in a)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise NotSL2("expected a 2x2 integer matrix", witness={"matrix": a})
    (a11, a12), (a21, a22) = rows
    det = a11 * a22 - a12 * a21
    if det != 1:
        raise NotSL2(f"determinant is {det}, not 1",
                     witness={"matrix": [list(r) for r in rows], "det": det})
    tr = a11 + a22
    if tr <= 2:
        raise TraceTooSmall(
            f"trace {tr} <= 2: eigenvalues are not real, distinct and positive",
            witness={"trace": tr})
    disc = tr * tr - 4
    lo = math.isqrt(disc)
    field = NumberField.create((-disc, 0, 1), lo, lo + 1)
    theta = field.gen()
    half = field.rational(1) / field.rational(2)
    lam1 = (field.rational(tr) - theta) * half
    lam2 = (field.rational(tr) + theta) * half
    assert (lam1 * lam2 - field.one()).is_zero(), "eigenvalue product != det"
    assert lam1.sign() > 0 and (lam2 - field.one()).sign() > 0
    assert a12 != 0, "SL(2,Z) with trace > 2 cannot be lower-triangular"
    inv_b = field.rational(a12).inverse()
    one = field.one()
    v1 = (one, (lam1 - field.rational(a11)) * inv_b)
    v2 = (one, (lam2 - field.rational(a11)) * inv_b)
    for lam, vec in ((lam1, v1), (lam2, v2)):
        img = (field.rational(a11) * vec[0] + field.rational(a12) * vec[1],
               field.rational(a21) * vec[0] + field.rational(a22) * vec[1])
        for got, want in zip(img, (lam * vec[0], lam * vec[1])):
            assert (got - want).is_zero(), "eigenvector identity fails"
    dictionary: dict[str, GAWord] = {
        "A": (lam1, field.zero()),
        "V1": (one, v1[1]),
        "V2": (one, v2[1]),
    }
    return CarriereReport(matrix=rows, trace=tr, disc=disc, field=field,
                          lam1=lam1, lam2=lam2, v1=v1, v2=v2,
                          dictionary=dictionary, verified=True)
