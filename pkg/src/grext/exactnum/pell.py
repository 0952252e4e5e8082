"""Pell equations and fundamental units of real quadratic orders.

Everything runs on exact integer continued-fraction states; no floating
point.  Two entry points:

* :func:`pell_fundamental` — minimal solution of x^2 - D y^2 = +-1 from the
  classical continued fraction of sqrt(D); negative-Pell solvability is read
  off the period parity.

* :func:`fundamental_unit_disc` — minimal solution of X^2 - D Y^2 = +-4 for
  a quadratic discriminant D (0 or 1 mod 4), i.e. the fundamental unit
  (X + Y sqrt(D))/2 > 1 of the real quadratic order of discriminant D.  It
  runs the continued fraction of (b + sqrt(D))/2 with b = D mod 2 and reads
  the unit from the first repeated state's convergent matrix, which is
  uniform in the conductor of the order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from ..errors import PerfectSquare


@dataclass(frozen=True)
class PellSolution:
    """Minimal x + y*sqrt(d) > 1 with x^2 - d y^2 = norm in {+1, -1}."""

    d: int
    x: int
    y: int
    norm: int

    def check(self) -> bool:
        return self.x * self.x - self.d * self.y * self.y == self.norm


def _require_nonsquare(d: int) -> None:
    if d < 0:
        raise ValueError("parameter must be positive")
    r = isqrt(d)
    if r * r == d:
        raise PerfectSquare(f"{d} is a perfect square", witness={"sqrt": r})


def continued_fraction_sqrt(d: int) -> tuple[int, list[int]]:
    """CF expansion sqrt(d) = [a0; period...] (period of the standard form)."""
    _require_nonsquare(d)
    a0 = isqrt(d)
    period = []
    p, q = 0, 1
    a = a0
    while True:
        p = a * q - p
        q = (d - p * p) // q
        a = (p + a0) // q
        period.append(a)
        if a == 2 * a0 and (p, q) == (a0, 1):
            break
    return a0, period


def pell_fundamental(d: int) -> PellSolution:
    """Fundamental solution of x^2 - d y^2 = +-1 (minimal > 1).

    norm is -1 exactly when the CF period of sqrt(d) has odd length (then
    the returned solution solves the negative Pell equation; its square
    solves the positive one).
    """
    a0, period = continued_fraction_sqrt(d)
    # convergents of [a0; period...] up to the end of the first period,
    # excluding the final partial quotient 2*a0
    p_prev, p_cur = 1, a0
    q_prev, q_cur = 0, 1
    for a in period[:-1]:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    ell = len(period)
    norm = -1 if ell % 2 == 1 else 1
    sol = PellSolution(d=d, x=p_cur, y=q_cur, norm=norm)
    if not sol.check():
        raise AssertionError(f"pell convergent failed its own equation: {sol}")
    return sol


def negative_pell_solvable(d: int) -> bool:
    return pell_fundamental(d).norm == -1


# ------------------------------------------------------- quadratic orders


def _floor_quad(p: int, d: int, q: int) -> int:
    """floor((p + sqrt(d)) / q) for nonsquare d > 0, q != 0, exactly."""
    s = isqrt(d)
    if q > 0:
        return (p + s) // q
    # irrational numerator, negative denominator: floor(-z) = -floor(z) - 1
    return -(((p + s) // (-q)) + 1)


@dataclass(frozen=True)
class OrderUnit:
    """Fundamental unit (x + y*sqrt(disc))/2 > 1 of the real quadratic order
    with discriminant disc; norm = (x^2 - disc*y^2)/4 in {+1, -1}."""

    disc: int
    x: int
    y: int
    norm: int

    def check(self) -> bool:
        return self.x * self.x - self.disc * self.y * self.y == 4 * self.norm


def fundamental_unit_disc(disc: int) -> OrderUnit:
    """Fundamental unit of the real quadratic order of discriminant disc.

    disc must be positive, congruent to 0 or 1 mod 4, and not a perfect
    square.  The continued fraction of (b + sqrt(disc))/2 (b = disc mod 2)
    is iterated with exact integer states (P, Q); the first repeated state
    closes a cycle, and the cycle's convergent matrix fixes the quadratic
    irrational, yielding the fundamental automorph, i.e. the unit.
    """
    if disc % 4 not in (0, 1):
        raise ValueError("discriminant must be 0 or 1 mod 4")
    _require_nonsquare(disc)
    b = disc % 2
    p, q = b, 2
    seen: dict[tuple[int, int], int] = {(p, q): 0}
    # convergent matrix M_k = [[pk, pk1], [qk, qk1]], M_{-1} = identity
    mats = [(1, 0, 0, 1)]
    k = 0
    while True:
        a = _floor_quad(p, disc, q)
        pk, pk1, qk, qk1 = mats[-1]
        mats.append((a * pk + pk1, pk, a * qk + qk1, qk))
        p = a * q - p
        q = (disc - p * p) // q
        k += 1
        state = (p, q)
        if state in seen:
            i, j = seen[state], k
            break
        seen[state] = k

    # W = M_{i-1}^{-1} M_{j-1}; mats[i] holds M_{i-1}
    a1, b1, c1, d1 = mats[i]
    a2, b2, c2, d2 = mats[j]
    det1 = a1 * d1 - b1 * c1            # +-1
    inv = (det1 * d1, -det1 * b1, -det1 * c1, det1 * a1)
    w21 = inv[2] * a2 + inv[3] * c2
    w22 = inv[2] * b2 + inv[3] * d2

    # unit u = w21 * alpha_i + w22 where alpha_i = (P_i + sqrt(disc)) / Q_i.
    # Recover (P_i, Q_i): it is the repeated state itself.
    pi, qi = state
    # u = (w21*pi + w22*qi + w21*sqrt(disc)) / qi = (X + Y sqrt(disc)) / 2
    num_r = w21 * pi + w22 * qi
    if (2 * num_r) % qi != 0 or (2 * w21) % qi != 0:
        raise AssertionError("cycle unit does not lie in the order")
    x = (2 * num_r) // qi
    y = (2 * w21) // qi
    if y == 0:
        raise AssertionError("degenerate cycle produced a torsion unit")
    x, y = abs(x), abs(y)
    norm4 = x * x - disc * y * y
    if norm4 not in (4, -4):
        raise AssertionError("cycle element is not a unit of the order")
    unit = OrderUnit(disc=disc, x=x, y=y, norm=norm4 // 4)
    if not unit.check():
        raise AssertionError(f"unit failed its own equation: {unit}")
    return unit
