"""Real algebraic number fields presented as Q[x]/(p) with an isolated root.

A :class:`NumberField` is a monic squarefree integer polynomial together
with a rational interval isolating exactly one real root theta.  Elements
are rational coefficient vectors in the power basis 1, theta, ...,
theta^(d-1).  All arithmetic is exact.  Sign determination refines the
isolating interval and, when interval arithmetic stays inconclusive,
falls back to an exact Tarski query, so there is no floating point
anywhere on the path.

Irreducibility of the defining polynomial is *lazy*: it is not checked at
construction.  If any inversion meets a zero divisor, the certified factor
is raised inside :class:`ReduciblePolynomialDetected`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import (
    DivisionByZero,
    MixedFields,
    MultipleRootsInInterval,
    NoRootInInterval,
    NotSquarefree,
    ReduciblePolynomialDetected,
)
from . import polys
from .polys import Poly

_MAX_REFINEMENTS = 64


@dataclass(frozen=True, eq=False)
class NumberField:
    """Q[x]/(min_poly) embedded in R by the unique root in root_interval.

    ``min_poly`` is stored as an integer coefficient tuple (increasing
    degree, monic).  ``root_interval`` is the *current* isolating interval;
    it only ever shrinks (a semantic no-op), held in a one-element list so
    the dataclass can stay frozen.
    """

    min_poly: tuple[int, ...]
    _interval: list = dc_field(repr=False)

    # -- construction ------------------------------------------------------

    @staticmethod
    def create(coeffs: Sequence[int], lo, hi) -> "NumberField":
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if len(cs) < 2:
            raise NoRootInInterval("defining polynomial must be nonconstant")
        if cs[-1] != 1:
            raise NotSquarefree(
                "defining polynomial must be monic with integer coefficients",
                witness={"leading": cs[-1]})
        p = polys.make_poly(cs)
        if not polys.is_squarefree(p):
            g = polys.gcd(p, polys.derivative(p))
            raise NotSquarefree(
                "defining polynomial has a repeated factor",
                witness={"gcd_with_derivative": _poly_strs(g)})
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise NoRootInInterval("empty interval", witness={"lo": str(lo), "hi": str(hi)})
        lo, hi = _shrink_off_roots(p, lo, hi)
        n = polys.count_roots(p, lo, hi)
        if n == 0:
            raise NoRootInInterval(
                "no root of the defining polynomial in the interval",
                witness={"lo": str(lo), "hi": str(hi)})
        if n > 1:
            raise MultipleRootsInInterval(
                f"interval contains {n} roots; it isolates none",
                witness={"count": n, "lo": str(lo), "hi": str(hi)})
        return NumberField(min_poly=tuple(cs), _interval=[(lo, hi)])

    # -- basic data --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._interval[0]

    def poly(self) -> Poly:
        return polys.make_poly(self.min_poly)

    def refine(self) -> tuple[Fraction, Fraction]:
        """Halve the isolating interval (exact bisection); returns it."""
        lo, hi = self._interval[0]
        p = self.poly()
        mid = (lo + hi) / 2
        if polys.evaluate(p, mid) == 0:
            # the root is exactly mid (rational); shrink symmetrically
            w = (hi - lo) / 8
            lo2, hi2 = mid - w, mid + w
            while polys.count_roots(p, lo2, hi2) != 1:
                w /= 2
                lo2, hi2 = mid - w, mid + w
            self._interval[0] = (lo2, hi2)
        elif polys.count_roots(p, lo, mid) == 1:
            self._interval[0] = (lo, mid)
        else:
            self._interval[0] = (mid, hi)
        return self._interval[0]

    def same_embedding(self, other: "NumberField") -> bool:
        """True when both fields isolate the same root of the same polynomial."""
        if self is other:
            return True
        if self.min_poly != other.min_poly:
            return False
        lo = max(self.interval[0], other.interval[0])
        hi = min(self.interval[1], other.interval[1])
        if lo >= hi:
            return False
        p = self.poly()
        lo, hi = _shrink_off_roots(p, lo, hi)
        return polys.count_roots(p, lo, hi) == 1

    # -- element constructors ---------------------------------------------

    def element(self, coeffs: Iterable) -> "FieldElement":
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            # reduce mod min_poly
            cs = list(polys.mod(polys.make_poly(cs), self.poly()))
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def zero(self) -> "FieldElement":
        return self.element([])

    def one(self) -> "FieldElement":
        return self.element([1])

    def gen(self) -> "FieldElement":
        """theta, the distinguished root."""
        if self.degree == 1:
            # theta is rational: x + c0 = 0 -> theta = -c0
            return self.element([-self.min_poly[0]])
        return self.element([0, 1])

    def rational(self, q) -> "FieldElement":
        return self.element([Fraction(q)])


def _shrink_off_roots(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Nudge endpoints inward until neither is a root of p (width shrinks by
    at most 1/4 per side, preserving any interior root that makes the
    interval isolating)."""
    step = (hi - lo) / 1024
    while polys.evaluate(p, lo) == 0:
        lo += step
        step /= 2
        if lo >= hi:
            raise NoRootInInterval("interval collapsed while avoiding root endpoints")
    step = (hi - lo) / 1024
    while polys.evaluate(p, hi) == 0:
        hi -= step
        step /= 2
        if lo >= hi:
            raise NoRootInInterval("interval collapsed while avoiding root endpoints")
    return lo, hi


def _poly_strs(p: Poly) -> list[str]:
    return [str(c) for c in p]


@dataclass(frozen=True)
class FieldElement:
    """Element of a NumberField: rational vector in the power basis."""

    field: NumberField
    coeffs: tuple[Fraction, ...]

    # -- representation ----------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldElement({list(map(str, self.coeffs))})"

    def __hash__(self) -> int:
        return hash((self.field.min_poly, self.coeffs))

    def serialize(self) -> list[str]:
        """Canonical form: list of 'p/q' strings (denominator always shown)."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        _require_same_field(self, other)
        return self.coeffs == other.coeffs

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "FieldElement") -> "FieldElement":
        _require_same_field(self, other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        _require_same_field(self, other)
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        _require_same_field(self, other)
        prod = polys.mul(polys.make_poly(self.coeffs), polys.make_poly(other.coeffs))
        return self.field.element(prod)

    def scale(self, q) -> "FieldElement":
        q = Fraction(q)
        return FieldElement(self.field, tuple(q * a for a in self.coeffs))

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        a = polys.make_poly(self.coeffs)
        p = self.field.poly()
        g, s, _t = polys.xgcd(a, p)
        if polys.degree(g) != 0:
            raise ReduciblePolynomialDetected(
                "zero divisor found: defining polynomial has a nontrivial factor",
                witness={"factor": _poly_strs(g)})
        # s*a + t*p = 1  =>  s = a^{-1} mod p
        return self.field.element(polys.mod(s, p))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        _require_same_field(self, other)
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- order structure -----------------------------------------------------

    def sign(self) -> int:
        """Exact sign in the real embedding: -1, 0, or +1.

        Interval arithmetic over the isolating interval first (refining up
        to a fixed budget), then an exact Tarski query as the certificate
        of last resort.
        """
        if self.is_zero():
            return 0
        if self.is_rational():
            c = self.coeffs[0]
            return (c > 0) - (c < 0)
        a = polys.make_poly(self.coeffs)
        for _ in range(_MAX_REFINEMENTS):
            lo_v, hi_v = _interval_eval(a, *self.field.interval)
            if lo_v > 0:
                return 1
            if hi_v < 0:
                return -1
            self.field.refine()
        lo, hi = self.field.interval
        return polys.tarski_query(self.field.poly(), a, lo, hi)

    def __lt__(self, other: "FieldElement") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "FieldElement") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "FieldElement") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "FieldElement") -> bool:
        return (self - other).sign() >= 0

    # -- algebraic invariants -------------------------------------------------

    def mult_matrix(self) -> list[list[Fraction]]:
        """Matrix of multiplication by self on the power basis (columns are
        images of basis vectors)."""
        d = self.field.degree
        cols = []
        basis_elt = self.field.one()
        theta = self.field.gen() if d > 1 else None
        for j in range(d):
            prod = self * basis_elt
            cols.append(list(prod.coeffs))
            if theta is not None and j + 1 < d:
                basis_elt = basis_elt * theta
        # transpose: entry [i][j] = coeff i of self * theta^j
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def minimal_polynomial(self) -> tuple[int, ...]:
        """Primitive integer minimal polynomial with positive leading
        coefficient (monic exactly when the element is an algebraic
        integer).  Increasing-degree coefficient order."""
        m = self.mult_matrix()
        chi = _char_poly(m)
        mp = polys.squarefree_part(chi)
        return polys.primitive_int_poly(mp)

    def norm(self) -> Fraction:
        """Field norm: (-1)^d * chi(0) for the char poly of multiplication."""
        m = self.mult_matrix()
        chi = _char_poly(m)
        d = self.field.degree
        return (Fraction(-1) ** d) * chi[0]

    def trace(self) -> Fraction:
        m = self.mult_matrix()
        return sum((m[i][i] for i in range(len(m))), Fraction(0))


def _require_same_field(a: FieldElement, b: FieldElement) -> None:
    if a.field is b.field:
        return
    if not a.field.same_embedding(b.field):
        raise MixedFields(
            "operands live in different fields",
            witness={"left": list(a.field.min_poly), "right": list(b.field.min_poly)})


def _interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Exact interval Horner: range bounds of p over [lo, hi]."""
    acc_lo, acc_hi = Fraction(0), Fraction(0)
    for c in reversed(p):
        cands = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(cands) + c, max(cands) + c
    return acc_lo, acc_hi


def _char_poly(m: list[list[Fraction]]) -> Poly:
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier (exact)."""
    d = len(m)
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    mk = [[Fraction(0)] * d for _ in range(d)]   # M_0 = 0
    ident = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    c = Fraction(1)
    for k in range(1, d + 1):
        # M_k = M * (M_{k-1} + c_{k-1} I)
        tmp = [[mk[i][j] + (c if i == j else 0) for j in range(d)] for i in range(d)]
        mk = _mat_mul(m, tmp)
        tr = sum((mk[i][i] for i in range(d)), Fraction(0))
        c = -tr / k
        coeffs[d - k] = c
    return polys.make_poly(coeffs)


def _mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
            for i in range(n)]
