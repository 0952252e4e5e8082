"""Embedded lattice construction, density certificates, and coordinates."""

from fractions import Fraction

import pytest

from grext.densegroup import make_lattice
from grext.errors import AmbientDimUnsupported, DependentGenerators, NotDense
from grext.exactnum.field import NumberField


@pytest.fixture
def sqrt2():
    return NumberField.create((-2, 0, 1), 1, 2)


@pytest.fixture
def cubic():
    return NumberField.create((-1, -1, 0, 1), 1, 2)


def lsqrt2(field):
    return make_lattice(field, 1, [(field.one(),), (field.gen(),)])


class TestLineLattices:
    def test_sqrt2_lattice_is_dense_and_checked(self, sqrt2):
        lat = lsqrt2(sqrt2)
        assert lat.rank == 2
        assert lat.dense is True
        assert lat.density_checked is True

    def test_single_generator_line_is_not_dense(self, sqrt2):
        with pytest.raises(NotDense):
            make_lattice(sqrt2, 1, [(sqrt2.one(),)])

    def test_rationally_dependent_generators_rejected_with_witness(self, sqrt2):
        one = sqrt2.one()
        half = sqrt2.element((Fraction(1, 2), Fraction(0)))
        with pytest.raises(DependentGenerators) as exc:
            make_lattice(sqrt2, 1, [(one,), (half,)])
        dep = exc.value.witness["dependency"]
        # integer dependency: dep[0]*1 + dep[1]*(1/2) = 0
        assert dep[0] * 1 + Fraction(dep[1], 2) == 0
        assert any(dep)

    def test_three_generators_on_line(self, cubic):
        th = cubic.gen()
        lat = make_lattice(cubic, 1, [(cubic.one(),), (th,), (th * th,)])
        assert lat.rank == 3 and lat.dense


class TestPlaneLattices:
    def test_rank_two_plane_lattice_is_discrete(self, sqrt2):
        z, o = sqrt2.zero(), sqrt2.one()
        lat = make_lattice(sqrt2, 2, [(o, z), (z, o)])
        assert lat.dense is False
        assert lat.density_checked is True

    def test_rank_three_plane_lattice_unchecked(self, sqrt2):
        z, o, th = sqrt2.zero(), sqrt2.one(), sqrt2.gen()
        lat = make_lattice(sqrt2, 2, [(o, z), (z, o), (z, th)])
        assert lat.dense is False
        assert lat.density_checked is False

    def test_ambient_dim_three_rejected(self, sqrt2):
        z, o = sqrt2.zero(), sqrt2.one()
        with pytest.raises(AmbientDimUnsupported):
            make_lattice(sqrt2, 3, [(o, z, z)])


class TestCoordinates:
    def test_embedding_roundtrip(self, sqrt2):
        lat = lsqrt2(sqrt2)
        for coords in [(1, 0), (0, 1), (3, -2), (-7, 5)]:
            vec = lat.element_embedding(coords)
            assert lat.solve_coordinates(vec) == coords

    def test_non_member_has_no_coordinates(self, sqrt2):
        lat = lsqrt2(sqrt2)
        half = sqrt2.element((Fraction(1, 2), Fraction(0)))
        assert lat.solve_coordinates((half,)) is None

    def test_coordinate_matrix_shape(self, sqrt2):
        z, o, th = sqrt2.zero(), sqrt2.one(), sqrt2.gen()
        lat = make_lattice(sqrt2, 2, [(o, z), (z, o), (z, th)])
        w = lat.coordinate_matrix()
        assert len(w) == 4 and all(len(r) == 3 for r in w)

    def test_embedding_is_additive(self, sqrt2):
        lat = lsqrt2(sqrt2)
        a = lat.element_embedding((2, 3))
        b = lat.element_embedding((-1, 4))
        s = lat.element_embedding((1, 7))
        assert all((x + y - z).is_zero() for x, y, z in zip(a, b, s))
