"""Extension classification over nerves in the three comparison modes."""

import pytest

from grext.classify.abgroup import FgAbelian
from grext.classify.extensions import (MODES, classify_extensions,
                                       hom_count_into_units,
                                       unit_quotient_group)
from grext.classify.cocycle import holonomy_class_count
from grext.classify.nerve import circle, sphere_tetrahedron, torus_seven
from grext.densegroup.lattice import make_lattice
from grext.exactnum.field import NumberField


@pytest.fixture
def lsqrt2():
    f = NumberField.create((-2, 0, 1), 1, 2)
    return make_lattice(f, 1, [(f.one(),), (f.gen(),)])


@pytest.fixture
def lcubic_rank3():
    f = NumberField.create((-1, -1, 0, 1), 1, 2)
    th = f.gen()
    return make_lattice(f, 1, [(f.one(),), (th,), (th * th,)])


class TestPointedIso:
    def test_sphere_is_single_class(self, lsqrt2):
        rep = classify_extensions(lsqrt2, sphere_tetrahedron(), "pointed-iso")
        assert rep.count == 1
        assert rep.pi1_name == "0"
        assert rep.complete

    def test_circle_is_parametric(self, lsqrt2):
        rep = classify_extensions(lsqrt2, circle(3), "pointed-iso")
        assert rep.count is None
        assert rep.description == (
            "maps of Z into Z_2 x Z ≅ elements of Z_2 x Z")
        assert rep.pi1_name == "Z"

    def test_torus_is_parametric(self, lsqrt2):
        rep = classify_extensions(lsqrt2, torus_seven(), "pointed-iso")
        assert rep.count is None
        assert rep.pi1_name == "Z^2"
        assert "Z^2" in rep.description


class TestIso:
    def test_matches_pointed_for_abelian_units(self, lsqrt2):
        for nerve in (circle(3), sphere_tetrahedron(), torus_seven()):
            a = classify_extensions(lsqrt2, nerve, "pointed-iso")
            b = classify_extensions(lsqrt2, nerve, "iso")
            assert a.count == b.count
            assert b.flags["conjugation_trivial"] is True


class TestEquivalence:
    def test_tetrahedron_carries_z2_torsor(self, lsqrt2):
        rep = classify_extensions(lsqrt2, sphere_tetrahedron(), "equivalence")
        assert rep.fiber_name == "Z^2"
        assert rep.count is None  # infinite torsor -> parametric
        assert rep.base_description == "only the trivial map"

    def test_circle_has_trivial_torsor(self, lsqrt2):
        rep = classify_extensions(lsqrt2, circle(3), "equivalence")
        assert rep.fiber_name == "0"
        assert rep.count is None  # base itself is infinite


class TestModesAndDowngrades:
    def test_unknown_mode_rejected(self, lsqrt2):
        with pytest.raises(ValueError):
            classify_extensions(lsqrt2, circle(3), "homotopy")
        assert set(MODES) == {"pointed-iso", "iso", "equivalence"}

    def test_incomplete_unit_group_downgrades(self, lcubic_rank3):
        rep = classify_extensions(lcubic_rank3, sphere_tetrahedron(),
                                  "pointed-iso", bound=2)
        assert rep.complete is False
        assert rep.flags["incomplete_unit_group"] is True
        assert rep.count is None


class TestHomCountFormulas:
    def test_into_z2(self):
        assert hom_count_into_units(FgAbelian((), 1), "Z_2")[0] == 2
        assert hom_count_into_units(FgAbelian((), 2), "Z_2")[0] == 4
        assert hom_count_into_units(FgAbelian((3,), 0), "Z_2")[0] == 1

    def test_into_z2xz_torsion(self):
        assert hom_count_into_units(FgAbelian((2,), 0), "Z_2 x Z")[0] == 2
        assert hom_count_into_units(FgAbelian((3,), 0), "Z_2 x Z")[0] == 1
        assert hom_count_into_units(FgAbelian((4,), 0), "Z_2 x Z")[0] == 2

    def test_trivial_source(self):
        n, desc = hom_count_into_units(FgAbelian((), 0), "Z_2 x Z")
        assert n == 1 and desc == "only the trivial map"


class TestFiniteQuotientCrossCheck:
    """Collapsing the infinite unit factor to Z_n must reproduce the
    brute cocycle counts: Hom(Z, Z_2 x Z_n) has 2n elements, and for the
    torus Hom(Z^2, Z_2 x Z_n) has (2n)^2."""

    def test_circle_counts(self):
        for n in (2, 3):
            g = unit_quotient_group("Z_2 x Z", n)
            assert holonomy_class_count(circle(3), g, True) == 2 * n
            # abelian -> free counts agree
            assert holonomy_class_count(circle(3), g, False) == 2 * n

    def test_torus_counts(self):
        g = unit_quotient_group("Z_2 x Z", 2)
        assert holonomy_class_count(torus_seven(), g, True) == 16

    def test_quotient_shapes(self):
        assert unit_quotient_group("Z_2 x Z", 1).name == "Z_2"
        assert unit_quotient_group("Z_2 x Z", 3).order == 6
        with pytest.raises(ValueError):
            unit_quotient_group("Z_2", 5)
        with pytest.raises(ValueError):
            unit_quotient_group("unknown", 2)
