"""Dense univariate polynomial arithmetic over the rationals.

Polynomials are tuples of :class:`fractions.Fraction` coefficients in
increasing degree order with no trailing zeros (the zero polynomial is the
empty tuple).  Everything here is exact; nothing ever rounds.

The module supplies the small kernel the rest of the package stands on:
ring arithmetic, euclidean division, gcds, squarefree parts, Sturm chains
for exact real-root counting, and Tarski queries for exact sign evaluation
at an isolated algebraic root.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple[Fraction, ...]

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)
X: Poly = (Fraction(0), Fraction(1))


def make_poly(coeffs: Iterable) -> Poly:
    """Normalize an iterable of numbers into a Poly (strip trailing zeros)."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p: Poly) -> int:
    """Degree; the zero polynomial gets -1."""
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def leading(p: Poly) -> Fraction:
    if not p:
        raise ValueError("zero polynomial has no leading coefficient")
    return p[-1]


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else Fraction(0)
        b = q[i] if i < len(q) else Fraction(0)
        out.append(a + b)
    return make_poly(out)


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return make_poly(out)


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return ZERO
    return tuple(a * c for a in p)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: p = quo*q + rem with deg rem < deg q."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = degree(q)
    lc = leading(q)
    quo = [Fraction(0)] * max(0, len(p) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        if rem[i] == 0:
            continue
        f = rem[i] / lc
        quo[i - dq] = f
        for j, b in enumerate(q):
            rem[i - dq + j] -= f * b
    return make_poly(quo), make_poly(rem)


def mod(p: Poly, q: Poly) -> Poly:
    return divmod_poly(p, q)[1]


def monic(p: Poly) -> Poly:
    if not p:
        return ZERO
    return scale(p, 1 / leading(p))


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd via the euclidean algorithm."""
    a, b = p, q
    while b:
        a, b = b, mod(a, b)
    return monic(a)


def xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended gcd: returns (g, s, t) with s*p + t*q = g, g monic (or zero)."""
    r0, r1 = p, q
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        quo, rem = divmod_poly(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return ZERO, ZERO, ZERO
    lc = leading(r0)
    return monic(r0), scale(s0, 1 / lc), scale(t0, 1 / lc)


def derivative(p: Poly) -> Poly:
    return make_poly(i * c for i, c in enumerate(p) if i > 0)


def evaluate(p: Poly, x) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p'), monic."""
    if not p:
        return ZERO
    g = gcd(p, derivative(p))
    quo, rem = divmod_poly(p, g)
    if rem:
        raise AssertionError("gcd does not divide its argument")
    return monic(quo)


def is_squarefree(p: Poly) -> bool:
    return degree(gcd(p, derivative(p))) == 0


def content_and_primitive(coeffs: Sequence[Fraction]) -> tuple[Fraction, tuple[int, ...]]:
    """Write a rational polynomial as content * (primitive integer polynomial).

    The primitive part has gcd 1 and positive leading coefficient; the
    content carries the sign.  Zero polynomial maps to (0, ()).
    """
    cs = make_poly(coeffs)
    if not cs:
        return Fraction(0), ()
    from math import gcd as igcd, lcm
    den = lcm(*(c.denominator for c in cs)) if len(cs) > 1 else cs[0].denominator
    ints = [int(c * den) for c in cs]
    g = 0
    for v in ints:
        g = igcd(g, abs(v))
    if ints[-1] < 0:
        g = -g
    prim = tuple(v // g for v in ints)
    return Fraction(g, den), prim


def primitive_int_poly(p: Poly) -> tuple[int, ...]:
    """Primitive integer polynomial associate of p, positive leading coeff."""
    return content_and_primitive(p)[1]


# --------------------------------------------------------------- Sturm chains

def sturm_chain(p: Poly, q: Poly | None = None) -> list[Poly]:
    """Sturm chain of (p, q); q defaults to p' (classical chain).

    The generalized chain starting at (p, q) supports Tarski queries.
    """
    if q is None:
        q = derivative(p)
    chain = [p, q]
    while chain[-1]:
        r = neg(mod(chain[-2], chain[-1]))
        chain.append(r)
    chain.pop()
    return chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sign_variations(chain: Sequence[Poly], x) -> int:
    """Count sign changes of the chain evaluated at rational x (zeros skipped)."""
    signs = [s for s in (_sign(evaluate(p, x)) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo, hi) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    Requires p(lo) != 0 and p(hi) != 0.  Works for any nonzero p: the count
    is taken on the squarefree part, so multiple roots count once.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("need lo < hi")
    sf = squarefree_part(p)
    if evaluate(sf, lo) == 0 or evaluate(sf, hi) == 0:
        raise ValueError("interval endpoint is a root")
    chain = sturm_chain(sf)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def tarski_query(p: Poly, a: Poly, lo, hi) -> int:
    """Tarski query: sum of sign(a(r)) over roots r of p in (lo, hi).

    Computed exactly from the Sturm chain of (p, p'*a).  Requires p
    squarefree on the interval with nonvanishing endpoints.  When (lo, hi)
    isolates a single root r of p, the query *is* sign(a(r)).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    chain = sturm_chain(p, mul(derivative(p), a))
    return sign_variations(chain, lo) - sign_variations(chain, hi)
