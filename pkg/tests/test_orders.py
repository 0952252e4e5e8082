"""Multiplier rings and their unit groups, pinned against independent checks.

The scalar-multiplier oracle used here enumerates integer matrices T with
bounded entries and keeps those realized by a scalar on the lattice; it is
an implementation-independent path to the same ring.
"""

from fractions import Fraction

import pytest

from grext.densegroup import (
    extension_from_t,
    is_unit_of,
    make_lattice,
    multiplier_ring,
    unit_group,
)
from grext.errors import DegreeUnsupported
from grext.exactnum.field import NumberField


@pytest.fixture
def sqrt2():
    return NumberField.create((-2, 0, 1), 1, 2)


@pytest.fixture
def sqrt3():
    return NumberField.create((-3, 0, 1), 1, 2)


@pytest.fixture
def cubic():
    return NumberField.create((-1, -1, 0, 1), 1, 2)


def line(field, *elts):
    return make_lattice(field, 1, [(e,) for e in elts])


def scalar_t_oracle(lat, bound):
    """All lattice multipliers whose T matrix has entries within the bound."""
    n = lat.rank
    found = []
    cells = [(i, j) for i in range(n) for j in range(n)]

    def rec(k, t):
        if k == len(cells):
            lam = extension_from_t(lat, tuple(tuple(r) for r in t))
            if lam is not None:
                found.append(lam)
            return
        i, j = cells[k]
        for v in range(-bound, bound + 1):
            t[i][j] = v
            rec(k + 1, t)

    rec(0, [[0] * n for _ in range(n)])
    return found


class TestMultiplierRing:
    def test_sqrt2_lattice_gives_full_quadratic_ring(self, sqrt2):
        ring = multiplier_ring(line(sqrt2, sqrt2.one(), sqrt2.gen()))
        assert [list(b.coeffs) for b in ring.basis] == [[1, 0], [0, 1]]

    def test_cubic_pair_lattice_gives_plain_integers(self, cubic):
        ring = multiplier_ring(line(cubic, cubic.one(), cubic.gen()))
        assert ring.rank == 1
        assert list(ring.basis[0].coeffs) == [1, 0, 0]

    def test_scaling_invariance(self, sqrt2):
        th = sqrt2.gen()
        two = sqrt2.rational(2)
        base = multiplier_ring(line(sqrt2, sqrt2.one(), th))
        scaled = multiplier_ring(line(sqrt2, two, two * th))
        shifted = multiplier_ring(line(sqrt2, th, th * th))
        assert [b.coeffs for b in base.basis] == [b.coeffs for b in scaled.basis]
        assert [b.coeffs for b in base.basis] == [b.coeffs for b in shifted.basis]

    def test_index_two_sublattice_gives_nonmaximal_order(self, sqrt2):
        th = sqrt2.gen()
        ring = multiplier_ring(line(sqrt2, sqrt2.one(), th + th))
        assert [list(b.coeffs) for b in ring.basis] == [[1, 0], [0, 2]]

    def test_ring_closed_under_multiplication(self, sqrt2):
        ring = multiplier_ring(line(sqrt2, sqrt2.one(), sqrt2.gen() + sqrt2.gen()))
        for a in ring.basis:
            for b in ring.basis:
                assert ring.contains(a * b)

    def test_full_cubic_lattice_gives_rank_three_order(self, cubic):
        th = cubic.gen()
        ring = multiplier_ring(line(cubic, cubic.one(), th, th * th))
        assert ring.rank == 3
        assert ring.contains(th)


class TestScalarOracle:
    def test_sqrt2_ring_matches_bounded_t_oracle(self, sqrt2):
        lat = line(sqrt2, sqrt2.one(), sqrt2.gen())
        ring = multiplier_ring(lat)
        oracle = scalar_t_oracle(lat, 3)
        assert all(ring.contains(lam) for lam in oracle)
        # the ring basis itself shows up among small-T multipliers
        seen = {lam.coeffs for lam in oracle}
        assert (Fraction(1), Fraction(0)) in seen
        assert (Fraction(0), Fraction(1)) in seen

    def test_cubic_multipliers_are_rational_integers_only(self, cubic):
        lat = line(cubic, cubic.one(), cubic.gen())
        oracle = scalar_t_oracle(lat, 3)
        for lam in oracle:
            assert lam.coeffs[1] == 0 and lam.coeffs[2] == 0
            assert lam.coeffs[0].denominator == 1


class TestUnitGroups:
    def test_sqrt2_units(self, sqrt2):
        units = unit_group(multiplier_ring(line(sqrt2, sqrt2.one(), sqrt2.gen())))
        assert units.name == "Z_2 x Z"
        assert units.complete is True
        assert list(units.torsion_generator.coeffs) == [-1, 0]
        assert list(units.fundamental.coeffs) == [1, 1]
        assert units.norm == -1

    def test_sqrt3_fundamental_unit_has_norm_plus_one(self, sqrt3):
        units = unit_group(multiplier_ring(line(sqrt3, sqrt3.one(), sqrt3.gen())))
        assert list(units.fundamental.coeffs) == [2, 1]
        assert units.norm == 1
        assert units.disc == 12

    def test_nonmaximal_order_unit(self, sqrt2):
        th = sqrt2.gen()
        units = unit_group(multiplier_ring(line(sqrt2, sqrt2.one(), th + th)))
        assert units.disc == 32
        assert list(units.fundamental.coeffs) == [3, 2]
        assert units.norm == 1

    def test_cubic_pair_lattice_units_are_torsion_only(self, cubic):
        units = unit_group(multiplier_ring(line(cubic, cubic.one(), cubic.gen())))
        assert units.name == "Z_2"
        assert units.fundamental is None
        assert units.complete is True

    def test_rank_three_order_raises_with_verified_units(self, cubic):
        th = cubic.gen()
        ring = multiplier_ring(line(cubic, cubic.one(), th, th * th))
        with pytest.raises(DegreeUnsupported) as exc:
            unit_group(ring)
        payload = exc.value.witness["verified_units"]
        assert payload["complete"] is False
        assert ["0/1", "1/1", "0/1"] in payload["generators"]

    def test_unit_membership_predicate(self, sqrt2):
        ring = multiplier_ring(line(sqrt2, sqrt2.one(), sqrt2.gen()))
        th = sqrt2.gen()
        assert is_unit_of(ring, sqrt2.one() + th)
        assert not is_unit_of(ring, th)           # norm -2
        assert not is_unit_of(ring, sqrt2.rational(2))
        assert not is_unit_of(ring, sqrt2.zero())

    def test_fundamental_unit_minimality_on_pell_coordinates(self, sqrt2, sqrt3):
        for field, disc in ((sqrt2, 8), (sqrt3, 12)):
            units = unit_group(multiplier_ring(line(field, field.one(), field.gen())))
            assert units.disc == disc
            best = None
            for y in range(1, 1001):
                for sign in (4, -4):
                    x2 = disc * y * y + sign
                    if x2 <= 0:
                        continue
                    x = round(x2 ** 0.5)
                    for xx in (x - 1, x, x + 1):
                        if xx > 0 and xx * xx == x2:
                            if best is None or (y, xx) < best[::-1]:
                                best = (xx, y)
                if best:
                    break
            x, y = best
            # u' = (x + y sqrt(disc)) / 2 is the smallest unit > 1; it must
            # be exactly the reported fundamental unit
            half = field.rational(1) / field.rational(2)
            root = field.gen() + field.gen()   # sqrt(disc) = 2 * field generator
            u_prime = (field.rational(x) + field.rational(y) * root) * half
            assert (u_prime - units.fundamental).is_zero()
