"""Finitely generated subgroups of R^n with algebraic coordinates.

An :class:`EmbeddedLattice` is a free abelian group Z^N mapped into
G = R^n (n in {1, 2}) by a tuple of coordinate vectors lying in one real
number field.  "Lattice" here means the abstract free group; its image is
typically *dense*, not discrete — density is what makes the rigidity
phenomena this package computes nontrivial.

Construction validates Q-linear independence of the generators (so the
group is free of rank exactly N) and certifies density where a certificate
is implemented:

* n = 1: dense iff N >= 2 (a rank >= 2 subgroup of R is never discrete);
* n = 2: dense if the generators contain two R-independent vectors and a
  third generator producing an irrational relation; the general test is
  not implemented, so density_checked may be False with the reason
  recorded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from ..errors import AmbientDimUnsupported, DependentGenerators, NotDense
from ..exactnum import intmat
from ..exactnum.field import FieldElement, NumberField

Vector = tuple[FieldElement, ...]


@dataclass(frozen=True)
class EmbeddedLattice:
    """Z^N embedded in R^n by generator coordinate vectors over one field."""

    field: NumberField
    ambient_dim: int
    generators: tuple[Vector, ...]
    dense: bool
    density_checked: bool

    @property
    def rank(self) -> int:
        return len(self.generators)

    def coordinate_matrix(self) -> list[list[Fraction]]:
        """(ambient_dim * degree) x N rational matrix: column j stacks the
        power-basis coordinates of generator j's ambient coordinates."""
        d = self.field.degree
        cols = []
        for gen in self.generators:
            col: list[Fraction] = []
            for comp in gen:
                col.extend(comp.coeffs)
            cols.append(col)
        rows = self.ambient_dim * d
        return [[cols[j][i] for j in range(len(cols))] for i in range(rows)]

    def element_embedding(self, coords: Sequence[int]) -> Vector:
        """Image in G of the abstract lattice point with integer coords."""
        if len(coords) != self.rank:
            raise ValueError("coordinate length mismatch")
        out = []
        for axis in range(self.ambient_dim):
            acc = self.field.zero()
            for c, gen in zip(coords, self.generators):
                acc = acc + gen[axis].scale(int(c))
            out.append(acc)
        return tuple(out)

    def solve_coordinates(self, vec: Vector) -> tuple[int, ...] | None:
        """Integer coordinates of an ambient vector in this lattice, or None."""
        d = self.field.degree
        target: list[Fraction] = []
        for comp in vec:
            target.extend(comp.coeffs)
        a = self.coordinate_matrix()
        sol = intmat.solve_exact(a, target)
        if sol is None:
            return None
        # verify exactly (solve_exact zero-fills free vars; columns are
        # independent here so the solution, if any, is unique)
        for i, row in enumerate(a):
            s = sum((row[j] * sol[j] for j in range(len(sol))), Fraction(0))
            if s != target[i]:
                return None
        if any(c.denominator != 1 for c in sol):
            return None
        return tuple(int(c) for c in sol)


def make_lattice(field: NumberField, ambient_dim: int,
                 generators: Sequence[Sequence[FieldElement]]) -> EmbeddedLattice:
    """Validate and build an EmbeddedLattice.

    Raises DependentGenerators when the generators are Q-linearly dependent
    (witness: an integer dependency vector), AmbientDimUnsupported for
    n not in {1, 2}, and NotDense when the image is certifiably discrete in
    R (n = 1 with a single generator).  For n = 1 with independent
    generators, rank >= 2 certifies density (a pair of Q-independent reals
    has irrational ratio); for n = 2 the flag is only set when decidable.
    """
    if ambient_dim not in (1, 2):
        raise AmbientDimUnsupported(
            f"ambient dimension {ambient_dim} unsupported (need 1 or 2)",
            witness={"ambient_dim": ambient_dim})
    gens = []
    for g in generators:
        g = tuple(g)
        if len(g) != ambient_dim:
            raise ValueError("generator arity does not match ambient dimension")
        gens.append(g)
    if not gens:
        raise DependentGenerators("no generators given")
    lat = EmbeddedLattice(field=field, ambient_dim=ambient_dim,
                          generators=tuple(gens), dense=False, density_checked=False)
    a = lat.coordinate_matrix()
    if intmat.rank(a) < len(gens):
        dep = intmat.kernel_basis(a)[0]
        den = 1
        for x in dep:
            den = lcm(den, x.denominator)
        witness = [int(x * den) for x in dep]
        raise DependentGenerators(
            "generators are linearly dependent over Q",
            witness={"dependency": witness})
    dense, checked = _density_certificate(lat)
    if ambient_dim == 1 and checked and not dense:
        raise NotDense(
            "a single generator spans a discrete subgroup of R",
            witness={"rank": lat.rank, "ambient_dim": ambient_dim})
    return EmbeddedLattice(field=field, ambient_dim=ambient_dim,
                           generators=tuple(gens), dense=dense, density_checked=checked)


def _density_certificate(lat: EmbeddedLattice) -> tuple[bool, bool]:
    """(dense, checked): exact density certificates where implemented."""
    if lat.ambient_dim == 1:
        # rank-1 subgroups of R are discrete; rank >= 2 with independent
        # generators are dense (two rationally independent reals generate a
        # dense subgroup)
        return (lat.rank >= 2), True
    # n = 2: a sufficient certificate.  If some pair of generators is
    # R-independent (nonzero exact determinant) and some third generator is
    # not in their Z-span... the full criterion needs closure machinery, so
    # only the easy discrete case is decided: rank 2 with R-independent
    # generators is a discrete lattice.
    if lat.rank == 2:
        det = _pair_det(lat.generators[0], lat.generators[1])
        if det.sign() != 0:
            return False, True   # genuine discrete lattice in R^2
        return False, False
    return False, False


def _pair_det(a: Vector, b: Vector) -> FieldElement:
    return a[0] * b[1] - a[1] * b[0]
