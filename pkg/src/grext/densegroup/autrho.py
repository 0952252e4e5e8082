"""Automorphism groups of dense embedded lattices.

An automorphism of the pair (Gamma, rho) is an automorphism of the abstract
group Z^N that extends to a linear automorphism of the ambient R^n.  Its
two faces are carried together in :class:`AutRhoElement`: the extension
(a field scalar for n = 1, an exact 2x2 field matrix for n = 2) and the
induced integer matrix T in GL(N, Z), tied by the exact compatibility
identity  M . v_j = sum_i v_i T[i][j]  (columns of T are the coordinate
vectors of the images of the generators).

* n = 1: Aut(rho) is computed *completely* as the unit group of the
  multiplier ring — torsion {+-1} times (for quadratic rings) the infinite
  cyclic group on the fundamental unit.

* n = 2: no complete algorithm is shipped; a bounded integer search returns
  verified elements with ``complete = False``.  The search enumerates
  bounded coordinate images of a field-spanning pair of generator columns
  (these determine the extension M), solves the remaining columns exactly,
  and keeps the candidates that are integral and unimodular.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import (
    AmbientDimUnsupported,
    DegreeUnsupported,
    IncompleteBase,
    MixedLattices,
    NotLatticePreserving,
    NotSurjective,
)
from ..exactnum import intmat
from ..exactnum.field import FieldElement
from .lattice import EmbeddedLattice, Vector, make_lattice
from .orders import (
    MultiplierRing,
    UnitGroup,
    bounded_unit_search,
    multiplier_ring,
    unit_group,
)

Extension = FieldElement | tuple[tuple[FieldElement, FieldElement],
                                 tuple[FieldElement, FieldElement]]


@dataclass(frozen=True)
class AutRhoElement:
    """Automorphism certificate: ambient extension + integer action."""

    lattice: EmbeddedLattice
    extension: Extension
    t_matrix: tuple[tuple[int, ...], ...]

    def apply_ambient(self, vec: Vector) -> Vector:
        """Extension applied to an ambient vector."""
        if isinstance(self.extension, FieldElement):
            return (self.extension * vec[0],)
        m = self.extension
        return (m[0][0] * vec[0] + m[0][1] * vec[1],
                m[1][0] * vec[0] + m[1][1] * vec[1])

    def apply_gamma(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        """T applied to abstract lattice coordinates."""
        t = self.t_matrix
        n = len(t)
        return tuple(sum(t[i][j] * coords[j] for j in range(n)) for i in range(n))

    def det_t(self) -> int:
        return intmat.det_int([list(r) for r in self.t_matrix])

    def serialize(self) -> dict:
        if isinstance(self.extension, FieldElement):
            ext = self.extension.serialize()
        else:
            ext = [[e.serialize() for e in row] for row in self.extension]
        return {"extension": ext, "T": [list(r) for r in self.t_matrix]}


@dataclass(frozen=True)
class GroupDescriptor:
    """Symbolic group with explicit verified generators."""

    name: str
    generators: tuple[AutRhoElement, ...]
    complete: bool


@dataclass(frozen=True)
class OutRhoReport:
    """Out(rho) for abelian ambient groups, with the inner/center data."""

    out: GroupDescriptor
    int_name: str
    gamma0_name: str


def check_autrho(elt: AutRhoElement) -> None:
    """Verify the AutRhoElement invariants exactly; raises on violation."""
    lat = elt.lattice
    n = len(elt.t_matrix)
    if n != lat.rank:
        raise AssertionError("T size does not match lattice rank")
    for j, gen in enumerate(lat.generators):
        image = elt.apply_ambient(gen)
        expect = lat.element_embedding(tuple(elt.t_matrix[i][j] for i in range(n)))
        for a, b in zip(image, expect):
            if not (a - b).is_zero():
                raise AssertionError("compatibility identity fails")
    if abs(elt.det_t()) != 1:
        raise AssertionError("T is not unimodular")


def is_automorphism(lat: EmbeddedLattice, m: Extension) -> AutRhoElement:
    """Certify an extension candidate: M . Gamma = Gamma, with its unique T.

    Raises NotLatticePreserving when some generator image leaves Gamma
    (witness: the generator index and image), NotSurjective when the induced
    integer matrix is not unimodular (witness: T and its determinant).
    """
    n = lat.ambient_dim
    if isinstance(m, FieldElement):
        if n != 1:
            raise AmbientDimUnsupported("scalar extension needs ambient dimension 1")
        if m.is_zero():
            raise NotLatticePreserving("zero scalar is not invertible")
        images = [(m * v[0],) for v in lat.generators]
    else:
        if n != 2:
            raise AmbientDimUnsupported("matrix extension needs ambient dimension 2")
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if det.is_zero():
            raise NotLatticePreserving("extension matrix is singular")
        images = [(m[0][0] * v[0] + m[0][1] * v[1],
                   m[1][0] * v[0] + m[1][1] * v[1]) for v in lat.generators]
    cols = []
    for j, img in enumerate(images):
        c = lat.solve_coordinates(img)
        if c is None:
            raise NotLatticePreserving(
                f"image of generator {j} leaves the subgroup",
                witness={"generator": j,
                         "image": [comp.serialize() for comp in img]})
        cols.append(c)
    t = tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(lat.rank))
    det_t = intmat.det_int([list(r) for r in t])
    if abs(det_t) != 1:
        raise NotSurjective(
            "the image lattice is a proper subgroup",
            witness={"T": [list(r) for r in t], "det": det_t})
    elt = AutRhoElement(lattice=lat, extension=m, t_matrix=t)
    check_autrho(elt)
    return elt


def malcev_lift(lat: EmbeddedLattice, a: AutRhoElement) -> tuple[tuple[int, ...], ...]:
    """The induced automorphism of the abstract Z^N (equals a.t_matrix);
    re-derived through is_automorphism as a self-check."""
    if a.lattice is not lat:
        a = is_automorphism(lat, a.extension)
    return a.t_matrix


@functools.lru_cache(maxsize=65536)
def compose_elements(a: AutRhoElement, b: AutRhoElement) -> AutRhoElement:
    """Certificate of the composite a . b, built algebraically.

    Lattice preservation and unimodularity are closed under products, so
    the composite of two verified certificates needs no re-verification:
    the extension acts as the product of extensions and the coordinate
    action as the product of T matrices.
    """
    if a.lattice is not b.lattice:
        raise MixedLattices("automorphisms live over different lattices")
    lat = a.lattice
    ea, eb = a.extension, b.extension
    if lat.ambient_dim == 1:
        ext = ea * eb
    else:
        ext = tuple(tuple(ea[i][0] * eb[0][j] + ea[i][1] * eb[1][j]
                          for j in range(2)) for i in range(2))
    n = lat.rank
    t = tuple(tuple(sum(a.t_matrix[i][k] * b.t_matrix[k][j]
                        for k in range(n))
                    for j in range(n)) for i in range(n))
    return AutRhoElement(lattice=lat, extension=ext, t_matrix=t)


@functools.lru_cache(maxsize=65536)
def inverse_element(a: AutRhoElement) -> AutRhoElement:
    """Certificate of the inverse of a verified automorphism certificate:
    the extension inverts in the field and T inverts over Z (det = +-1)."""
    lat = a.lattice
    e = a.extension
    if lat.ambient_dim == 1:
        ext = e.inverse()
    else:
        det = e[0][0] * e[1][1] - e[0][1] * e[1][0]
        inv = det.inverse()
        ext = ((e[1][1] * inv, -e[0][1] * inv),
               (-e[1][0] * inv, e[0][0] * inv))
    n = lat.rank
    rows = [list(r) for r in a.t_matrix]
    cols = []
    for i in range(n):
        unit = [Fraction(1 if j == i else 0) for j in range(n)]
        sol = intmat.solve_exact(rows, unit)
        cols.append([int(x) for x in sol])
    t = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return AutRhoElement(lattice=lat, extension=ext, t_matrix=t)


@functools.lru_cache(maxsize=None)
def identity_element(lat: EmbeddedLattice) -> AutRhoElement:
    """The identity automorphism certificate, cached per lattice."""
    if lat.ambient_dim == 1:
        one = lat.field.one()
    else:
        o, z = lat.field.one(), lat.field.zero()
        one = ((o, z), (z, o))
    return is_automorphism(lat, one)


# --------------------------------------------------------------- aut_rho n=1

@functools.lru_cache(maxsize=None)
def aut_rho(lat: EmbeddedLattice, bound: int = 5) -> GroupDescriptor:
    """Aut(rho).

    n = 1: complete, from the unit group of the multiplier ring (falls back
    to a verified-but-incomplete bounded search when the multiplier ring has
    rank > 2, where no fundamental-unit routine is available).
    n = 2: verified elements from a bounded search (complete = False).
    """
    if lat.ambient_dim == 1:
        return _aut_rho_line(lat)
    return _aut_rho_plane(lat, bound)


def _aut_rho_line(lat: EmbeddedLattice) -> GroupDescriptor:
    ring = multiplier_ring(lat)
    try:
        units = unit_group(ring)
    except DegreeUnsupported:
        found = bounded_unit_search(ring, bound=2)
        gens = tuple(is_automorphism(lat, u) for u in found)
        return GroupDescriptor(name="verified units (bounded search)",
                               generators=gens, complete=False)
    gens = [is_automorphism(lat, units.torsion_generator)]
    if units.fundamental is not None:
        gens.append(is_automorphism(lat, units.fundamental))
    return GroupDescriptor(name=units.name, generators=tuple(gens), complete=True)


@functools.lru_cache(maxsize=None)
def aut_rho_unit_data(lat: EmbeddedLattice) -> tuple[MultiplierRing, UnitGroup]:
    """The multiplier ring and unit group behind aut_rho (n = 1)."""
    ring = multiplier_ring(lat)
    return ring, unit_group(ring)


@functools.lru_cache(maxsize=65536)
def power_element(lat: EmbeddedLattice, eps: int, k: int) -> AutRhoElement:
    """The element (+-1) * u^k of Aut(rho) for n = 1 lattices."""
    if eps not in (1, -1):
        raise ValueError("eps must be +-1")
    _, units = aut_rho_unit_data(lat)
    lam = lat.field.one()
    if units.fundamental is not None and k:
        lam = units.fundamental ** k
    elif k and units.fundamental is None:
        raise ValueError("no infinite-order generator in this Aut(rho)")
    if eps == -1:
        lam = -lam
    return is_automorphism(lat, lam)


def membership(lat: EmbeddedLattice, m: Extension) -> bool:
    """Exact membership test in Aut(rho): both M and M^{-1} preserve Gamma."""
    try:
        is_automorphism(lat, m)
        return True
    except (NotLatticePreserving, NotSurjective):
        return False


# --------------------------------------------------------------- aut_rho n=2

def relation_space_preserved(lat: EmbeddedLattice, t: tuple[tuple[int, ...], ...]) -> bool:
    """Kernel-preservation membership criterion: T maps the relation space of
    the embedding columns (the kernel of the generator matrix over the field)
    into itself.  Equivalent to: T extends to a linear map of the ambient
    space, so this plus unimodularity is exact membership in Aut(rho)."""
    ker = _field_kernel(lat)
    if not ker:
        return True
    n = lat.rank
    F = lat.field
    for c in ker:
        tc = []
        for i in range(n):
            acc = F.zero()
            for j in range(n):
                if t[i][j]:
                    acc = acc + c[j] * F.rational(t[i][j])
            tc.append(acc)
        if not _in_field_span(ker, tc):
            return False
    return True


def _field_kernel(lat: EmbeddedLattice) -> list[list[FieldElement]]:
    """Basis of {c in F^N : sum_j c_j v_j = 0}, by field Gaussian elimination."""
    F = lat.field
    n = lat.rank
    rows = [[lat.generators[j][i] for j in range(n)] for i in range(lat.ambient_dim)]
    reduced, pivots = _field_rref(rows)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        vec = [F.zero()] * n
        vec[f] = F.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][f]
        basis.append(vec)
    return basis


def _field_rref(rows: list[list[FieldElement]]):
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c].sign() != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c].sign() != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def _in_field_span(basis: list[list[FieldElement]], vec: list[FieldElement]) -> bool:
    rows = [list(b) for b in basis]
    _, piv_before = _field_rref(rows)
    _, piv_after = _field_rref(rows + [vec])
    return len(piv_after) == len(piv_before)


def extension_from_t(lat: EmbeddedLattice, t: tuple[tuple[int, ...], ...]) -> Extension | None:
    """Solve for the ambient extension M realizing T (M v_j = sum_i v_i T_ij)
    on a spanning set, then verify the remaining columns; None when T does
    not extend (equivalently, when the relation space is not preserved)."""
    F = lat.field
    n = lat.rank
    images = [lat.element_embedding(tuple(t[i][j] for i in range(n)))
              for j in range(n)]
    if lat.ambient_dim == 1:
        p = next((j for j in range(n) if lat.generators[j][0].sign() != 0), None)
        if p is None:
            return None
        m = images[p][0] / lat.generators[p][0]
        for j in range(n):
            diff = m * lat.generators[j][0] - images[j][0]
            if not diff.is_zero():
                return None
        return m
    pair = _spanning_pair(lat.generators)
    if pair is None:
        return None
    p, q = pair
    m = _matrix_from_pair_action(lat.generators[p], lat.generators[q],
                                 images[p], images[q])
    for j in range(n):
        v = lat.generators[j]
        img = (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])
        if not all((a - b).is_zero() for a, b in zip(img, images[j])):
            return None
    return m


def _aut_rho_plane(lat: EmbeddedLattice, bound: int) -> GroupDescriptor:
    """Bounded search for n = 2.

    Enumerates integer coordinate images (tp, tq) of a field-spanning pair
    of generators — these determine the candidate extension M — and solves
    the remaining generator coordinates exactly.  The inner loop is pure
    integer arithmetic: the coordinates of the remaining images are linear
    in (tp, tq), so their integrality and consistency reduce to congruences
    against precomputed integer matrices.  Survivors are certified through
    is_automorphism.
    """
    F = lat.field
    gens = lat.generators
    n = lat.rank
    name = f"bounded-search(B={bound}) verified subgroup"
    pair = _spanning_pair(gens)
    if pair is None:
        # all generators on one field line: only +-identity is certain here
        found = []
        for sign in (1, -1):
            s = F.rational(sign)
            found.append(is_automorphism(lat, ((s, F.zero()), (F.zero(), s))))
        return GroupDescriptor(name=name, generators=tuple(_sorted_by_t(found)),
                               complete=False)
    p, q = pair
    rest = [r for r in range(n) if r not in (p, q)]
    box = _integer_box(n, bound)
    solvers = [_column_solver(lat, p, q, r) for r in rest]
    # per-box-vector transforms, precomputed once
    pre_p = [[sol.apply_p(t) for sol in solvers] for t in box]
    pre_q = [[sol.apply_q(t) for sol in solvers] for t in box]
    found_ts: dict[tuple, AutRhoElement] = {}
    for ip, tp in enumerate(box):
        ap = pre_p[ip]
        for iq, tq in enumerate(box):
            bq = pre_q[iq]
            cols: dict[int, tuple[int, ...]] = {p: tp, q: tq}
            ok = True
            for k, sol in enumerate(solvers):
                c = sol.combine(ap[k], bq[k])
                if c is None:
                    ok = False
                    break
                cols[rest[k]] = c
            if not ok:
                continue
            t = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
            if t in found_ts:
                continue
            if abs(intmat.det_int([list(row) for row in t])) != 1:
                continue
            m_std = _matrix_from_pair_action(
                gens[p], gens[q],
                lat.element_embedding(tp), lat.element_embedding(tq))
            elt = is_automorphism(lat, m_std)
            found_ts[elt.t_matrix] = elt
    elements = _sorted_by_t(found_ts.values())
    return GroupDescriptor(name=name, generators=tuple(elements), complete=False)


class _ColumnSolver:
    """Integer linear form of one remaining generator's image coordinates.

    Image coords of generator r under the pair-determined M are
    (Ai . tp + Bi . tq) / den, subject to Ci . tp + Di . tq = 0.
    """

    def __init__(self, ai, bi, den, ci, di):
        self.ai, self.bi, self.den = ai, bi, den
        self.ci, self.di = ci, di

    def apply_p(self, t):
        a = tuple(sum(r[j] * t[j] for j in range(len(t))) for r in self.ai)
        c = tuple(sum(r[j] * t[j] for j in range(len(t))) for r in self.ci)
        return a, c

    def apply_q(self, t):
        b = tuple(sum(r[j] * t[j] for j in range(len(t))) for r in self.bi)
        d = tuple(sum(r[j] * t[j] for j in range(len(t))) for r in self.di)
        return b, d

    def combine(self, ap, bq):
        a, c = ap
        b, d = bq
        for x, y in zip(c, d):
            if x + y:
                return None
        out = []
        for x, y in zip(a, b):
            s = x + y
            if s % self.den:
                return None
            out.append(s // self.den)
        return tuple(out)


def _column_solver(lat: EmbeddedLattice, p: int, q: int, r: int) -> _ColumnSolver:
    gens = lat.generators
    x, y = _solve_pair(gens[p], gens[q], gens[r])
    w = lat.coordinate_matrix()
    d = lat.field.degree
    n = lat.rank
    mx, my = x.mult_matrix(), y.mult_matrix()
    w_top, w_bot = w[:d], w[d:]

    def blk(mc, wt, wb):
        top = intmat.mat_mul_frac(mc, wt)
        bot = intmat.mat_mul_frac(mc, wb)
        return top + bot

    u_r = blk(mx, w_top, w_bot)   # coords of x_r * (V tp): U_r . tp
    v_r = blk(my, w_top, w_bot)   # coords of y_r * (V tq): V_r . tq
    # solution operator: N independent rows of W
    piv_rows = _independent_rows(w, n)
    s_inv = _frac_inverse([w[i] for i in piv_rows])
    a_r = intmat.mat_mul_frac(s_inv, [u_r[i] for i in piv_rows])
    b_r = intmat.mat_mul_frac(s_inv, [v_r[i] for i in piv_rows])
    # consistency: annihilator rows K of the column space of W
    k_rows = intmat.kernel_basis(intmat.transpose(w))
    if k_rows:
        c_r = intmat.mat_mul_frac([list(k) for k in k_rows], u_r)
        d_r = intmat.mat_mul_frac([list(k) for k in k_rows], v_r)
    else:
        c_r, d_r = [], []
    den = math.lcm(*(e.denominator for row in a_r + b_r for e in row)) \
        if a_r or b_r else 1
    ai = [[int(e * den) for e in row] for row in a_r]
    bi = [[int(e * den) for e in row] for row in b_r]
    cden = math.lcm(*(e.denominator for row in c_r + d_r for e in row)) \
        if c_r or d_r else 1
    ci = [[int(e * cden) for e in row] for row in c_r]
    di = [[int(e * cden) for e in row] for row in d_r]
    return _ColumnSolver(ai, bi, den, ci, di)


def _independent_rows(w, n: int) -> list[int]:
    rows: list[int] = []
    acc: list[list[Fraction]] = []
    for i, row in enumerate(w):
        if intmat.rank(acc + [list(row)]) > len(rows):
            rows.append(i)
            acc.append(list(row))
            if len(rows) == n:
                return rows
    raise AssertionError("generator matrix lost full column rank")


def _frac_inverse(m):
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] +
           [Fraction(1 if k == i else 0) for k in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                g = aug[i][c]
                aug[i] = [a - g * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def _spanning_pair(gens) -> tuple[int, int] | None:
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            det = gens[i][0] * gens[j][1] - gens[j][0] * gens[i][1]
            if det.sign() != 0:
                return i, j
    return None


def _solve_pair(vp: Vector, vq: Vector, vr: Vector) -> tuple[FieldElement, FieldElement]:
    """x, y in F with x*vp + y*vq = vr (the pair spans F^2)."""
    det = vp[0] * vq[1] - vq[0] * vp[1]
    inv = det.inverse()
    x = (vr[0] * vq[1] - vq[0] * vr[1]) * inv
    y = (vp[0] * vr[1] - vr[0] * vp[1]) * inv
    return x, y


def _matrix_from_pair_action(vp: Vector, vq: Vector, ip: Vector, iq: Vector):
    """The 2x2 field matrix M with M vp = ip, M vq = iq."""
    det = vp[0] * vq[1] - vq[0] * vp[1]
    inv = det.inverse()
    # M = [ip iq] * [vp vq]^{-1}
    a = (ip[0] * vq[1] - iq[0] * vp[1]) * inv
    b = (iq[0] * vp[0] - ip[0] * vq[0]) * inv
    c = (ip[1] * vq[1] - iq[1] * vp[1]) * inv
    d = (iq[1] * vp[0] - ip[1] * vq[0]) * inv
    return ((a, b), (c, d))


def _integer_box(n: int, bound: int):
    out = [()]
    for _ in range(n):
        out = [t + (v,) for t in out for v in range(-bound, bound + 1)]
    return out


def _sorted_by_t(elements) -> list[AutRhoElement]:
    return sorted(elements, key=lambda e: tuple(x for row in e.t_matrix for x in row))


# ------------------------------------------------------------- derived ops

def out_rho(lat: EmbeddedLattice, bound: int = 5) -> OutRhoReport:
    """Out(rho) = Aut(rho) for abelian ambient groups; Int(rho) is trivial
    and the center Gamma_0 is all of Gamma."""
    desc = aut_rho(lat, bound=bound)
    return OutRhoReport(out=desc, int_name="trivial", gamma0_name=f"Z^{lat.rank}")


def product_aut(lat: EmbeddedLattice) -> GroupDescriptor:
    """Automorphisms of the doubled embedding rho x rho in R^2.

    Generators: the factor swap plus each Aut(rho) generator placed in each
    factor; every emitted element is re-certified on the doubled lattice.
    """
    if lat.ambient_dim != 1:
        raise AmbientDimUnsupported("product doubling starts from a line lattice")
    base = aut_rho(lat)
    if not base.complete:
        raise IncompleteBase("product structure requires a complete base Aut(rho)")
    F = lat.field
    doubled_gens = [(v[0], F.zero()) for v in lat.generators] + \
                   [(F.zero(), v[0]) for v in lat.generators]
    dlat = make_lattice(F, 2, doubled_gens)
    one, zero = F.one(), F.zero()
    swap = ((zero, one), (one, zero))
    elements = [is_automorphism(dlat, swap)]
    for g in base.generators:
        lam = g.extension
        elements.append(is_automorphism(dlat, ((lam, zero), (zero, one))))
        elements.append(is_automorphism(dlat, ((one, zero), (zero, lam))))
    inner = f"({base.name})" if " " in base.name else base.name
    name = f"Z_2 ⋉ ({inner} × {inner})"
    return GroupDescriptor(name=name, generators=tuple(elements), complete=True)
