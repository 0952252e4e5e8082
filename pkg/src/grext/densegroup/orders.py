"""Multiplier rings of dense subgroups of R, and their unit groups.

For an embedded lattice Gamma in R with coordinates in a number field F,
the multiplier ring is

    O(Gamma) = { lam in F : lam * Gamma  (subset of)  Gamma },

an order in the subfield K = { lam : lam * span_Q(Gamma) = span_Q(Gamma) }.
It is computed in two exact stages: first the rational multiplier algebra K
(a kernel computation), then the integrality locus (a preimage-lattice
computation via Smith normal form).  The resulting Z-basis is canonicalized
by Hermite normal form and re-based so the first basis element is 1.

Unit groups of rank-2 multiplier rings come from the continued-fraction
fundamental unit of the order's discriminant; rank-1 rings are Z with unit
group {+-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from fractions import Fraction

from ..errors import AmbientDimUnsupported, DegreeUnsupported
from ..exactnum import intmat
from ..exactnum.field import FieldElement, NumberField
from ..exactnum.pell import fundamental_unit_disc
from .lattice import EmbeddedLattice


@dataclass(frozen=True)
class MultiplierRing:
    """Order in a subfield of lat.field, with canonical Z-basis.

    basis[0] is always the unit element 1.  ``rank`` is the Z-rank, which
    equals the degree of the subfield K the ring spans.  For rank > 2 the
    remaining basis vectors keep the canonical row form (Hermite-reduced,
    first nonzero entry positive) without further normalization.
    """

    lattice: EmbeddedLattice
    basis: tuple[FieldElement, ...]

    @property
    def field(self) -> NumberField:
        return self.lattice.field

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_rows(self) -> list[list[Fraction]]:
        return [list(b.coeffs) for b in self.basis]

    def contains(self, x: FieldElement) -> bool:
        return intmat.in_lattice_rows(self.basis_rows(), list(x.coeffs)) is not None

    def coordinates(self, x: FieldElement) -> list[int] | None:
        return intmat.in_lattice_rows(self.basis_rows(), list(x.coeffs))


def multiplier_ring(lat: EmbeddedLattice) -> MultiplierRing:
    """Compute O(Gamma) for a subgroup of R (ambient_dim must be 1)."""
    if lat.ambient_dim != 1:
        raise AmbientDimUnsupported(
            "multiplier rings are computed for subgroups of R only",
            witness={"ambient_dim": lat.ambient_dim})
    F = lat.field
    d = F.degree
    n_gens = lat.rank
    w = lat.coordinate_matrix()            # d x N rational

    # ---- stage 1: rational multiplier algebra K = {lam : lam Q-span = Q-span}
    # condition: for each generator v, coords(lam*v) lies in colspace(w),
    # i.e. A @ M_v @ x = 0 where A spans the left annihilator of w.
    wt = intmat.transpose(w)
    ann_cols = intmat.kernel_basis(wt)     # u with w^T u = 0  <=>  u^T w = 0
    ann = [list(u) for u in ann_cols]      # rows of the annihilator matrix
    conditions: list[list[Fraction]] = []
    mult_mats = [v[0].mult_matrix() for v in lat.generators]
    for mv in mult_mats:
        for u in ann:
            # row: u^T @ M_v
            conditions.append([
                sum((u[i] * mv[i][j] for i in range(d)), Fraction(0))
                for j in range(d)])
    if conditions:
        k_basis = intmat.kernel_basis(conditions)
    else:
        k_basis = [[Fraction(int(i == j)) for i in range(d)] for j in range(d)]
    m = len(k_basis)
    if m == 0:
        raise AssertionError("rational multiplier algebra lost the unit element")

    # ---- stage 2: integrality locus O = {lam in K : coefficient matrix integral}
    # phi: K -> Q^(N*N), lam |-> (c_ij) with lam*v_i = sum_j c_ij v_j
    phi_cols: list[list[Fraction]] = []
    for t in range(m):
        lam = F.element(k_basis[t])
        flat: list[Fraction] = []
        for v in lat.generators:
            target = list((lam * v[0]).coeffs)
            c = intmat.solve_exact(w, target)
            if c is None:
                raise AssertionError("stage-1 multiplier fails to preserve the span")
            flat.extend(c)
        phi_cols.append(flat)
    phi = [[phi_cols[t][row] for t in range(m)] for row in range(n_gens * n_gens)]
    den = 1
    from math import lcm
    for row in phi:
        for x in row:
            den = lcm(den, x.denominator)
    b_int = [[int(x * den) for x in row] for row in phi]
    pre = intmat.preimage_lattice(b_int, den)    # m x m, columns = basis

    # ---- assemble O basis as field elements and canonicalize
    raw_rows: list[list[Fraction]] = []
    for j in range(m):
        coeffs = [Fraction(0)] * d
        for t in range(m):
            c = pre[t][j]
            if c:
                for i in range(d):
                    coeffs[i] += c * k_basis[t][i]
        raw_rows.append(coeffs)
    canon = intmat.lattice_canonical_rows(raw_rows)
    basis = _rebase_with_unit(F, canon)
    ring = MultiplierRing(lattice=lat, basis=tuple(basis))
    _check_ring_invariants(ring)
    return ring


def _rebase_with_unit(F: NumberField, rows: list[list[Fraction]]) -> list[FieldElement]:
    """Change basis so the first vector is the field unit 1; canonicalize the
    rank-2 complement mod Z and by sign."""
    one = [Fraction(1)] + [Fraction(0)] * (F.degree - 1)
    z = intmat.in_lattice_rows(rows, one)
    if z is None:
        raise AssertionError("multiplier ring does not contain 1")
    if len(rows) == 1:
        return [F.one()]
    if len(rows) == 2:
        z1, z2 = z
        # extend (z1, z2) to a unimodular matrix: a*z1 + b*z2 = 1
        a, b = _ext_gcd_pair(z1, z2)
        rho = [(-b) * rows[0][i] + a * rows[1][i] for i in range(F.degree)]
        rho_elt = F.element(rho)
        # reduce mod Z*1 so the rational coefficient lands in [0, 1)
        q = math.floor(rho_elt.coeffs[0])
        rho_elt = rho_elt - F.rational(q)
        # sign-normalize the irrational part
        tail = [c for c in rho_elt.coeffs[1:] if c != 0]
        if tail and tail[0] < 0:
            rho_elt = -rho_elt
            q = math.floor(rho_elt.coeffs[0])
            rho_elt = rho_elt - F.rational(q)
        return [F.one(), rho_elt]
    # rank > 2: keep the canonical rows, but rotate 1 to the front if present
    basis = [F.element(r) for r in rows]
    return basis


def _ext_gcd_pair(z1: int, z2: int) -> tuple[int, int]:
    """(a, b) with a*z1 + b*z2 = gcd = 1 (raises if gcd != 1)."""
    old_r, r = z1, z2
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if abs(old_r) != 1:
        raise AssertionError("unit element is imprimitive in the ring lattice")
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def _check_ring_invariants(ring: MultiplierRing) -> None:
    lat = ring.lattice
    for b in ring.basis:
        for v in lat.generators:
            if lat.solve_coordinates(((b * v[0]),)) is None:
                raise AssertionError("ring basis element does not preserve the subgroup")
    for x in ring.basis:
        for y in ring.basis:
            if not ring.contains(x * y):
                raise AssertionError("ring basis is not multiplicatively closed")
    if not ring.contains(ring.field.one()):
        raise AssertionError("ring does not contain 1")


# ------------------------------------------------------------------ units

@dataclass(frozen=True)
class UnitGroup:
    """Unit group of a multiplier ring.

    name is the canonical descriptor string ("Z_2" for {+-1}, "Z_2 x Z"
    for torsion x infinite cyclic).  ``fundamental`` is the infinite-order
    generator normalized to be > 1; ``norm`` is its field norm over the
    quadratic subfield (+1 or -1); ``disc`` is the discriminant of the
    ring as a quadratic order.
    """

    ring: MultiplierRing
    name: str
    torsion_generator: FieldElement
    fundamental: FieldElement | None
    disc: int | None
    norm: int | None
    complete: bool


def unit_group(ring: MultiplierRing) -> UnitGroup:
    F = ring.field
    if ring.rank == 1:
        return UnitGroup(ring=ring, name="Z_2", torsion_generator=-F.one(),
                         fundamental=None, disc=None, norm=None, complete=True)
    if ring.rank != 2:
        found = bounded_unit_search(ring, bound=2)
        raise DegreeUnsupported(
            f"unit groups implemented for orders of rank 1 and 2, got rank {ring.rank}",
            witness={"rank": ring.rank,
                     "verified_units": {
                         "name": "verified units (bounded search)",
                         "generators": [u.serialize() for u in found],
                         "complete": False}})
    rho = ring.basis[1]
    mp = rho.minimal_polynomial()
    if len(mp) != 3 or mp[2] != 1:
        raise AssertionError("rank-2 ring generator is not a quadratic integer")
    c0, c1, _ = mp
    disc = c1 * c1 - 4 * c0
    unit = fundamental_unit_disc(disc)
    # sqrt(disc) = sigma * (2 rho + c1) in the real embedding
    e = rho.scale(2) + F.rational(c1)
    sigma = e.sign()
    if sigma == 0:
        raise AssertionError("degenerate quadratic generator")
    u_elt = (F.rational(unit.x) + e.scale(sigma * unit.y)).scale(Fraction(1, 2))
    if not ring.contains(u_elt):
        raise AssertionError("fundamental unit fell outside its own order")
    nrm = u_elt.norm()
    if abs(nrm) != 1:
        raise AssertionError("computed unit has |norm| != 1 over the ambient field")
    if not u_elt > F.one():
        raise AssertionError("fundamental unit normalization failed")
    return UnitGroup(ring=ring, name="Z_2 x Z", torsion_generator=-F.one(),
                     fundamental=u_elt, disc=disc, norm=unit.norm, complete=True)


def is_unit_of(ring: MultiplierRing, x: FieldElement) -> bool:
    """Exact membership test: x in O and x^{-1} in O."""
    if x.is_zero() or not ring.contains(x):
        return False
    return ring.contains(x.inverse())


def bounded_unit_search(ring: MultiplierRing, bound: int) -> list[FieldElement]:
    """Verified units with basis coordinates in [-bound, bound]; not complete."""
    coords = [()]
    for _ in range(ring.rank):
        coords = [c + (v,) for c in coords for v in range(-bound, bound + 1)]
    units = []
    for c in coords:
        if not any(c):
            continue
        x = ring.field.zero()
        for ci, b in zip(c, ring.basis):
            if ci:
                x = x + ring.field.rational(ci) * b
        if is_unit_of(ring, x):
            units.append((c, x))
    units.sort(key=lambda p: p[0])
    return [x for _, x in units]
