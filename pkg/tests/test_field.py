"""Number fields: exact arithmetic, signs, minimal polynomials, errors."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grext.errors import (
    DivisionByZero,
    MixedFields,
    MultipleRootsInInterval,
    NoRootInInterval,
    NotSquarefree,
    ReduciblePolynomialDetected,
)
from grext.exactnum.field import NumberField


def sqrt2_field() -> NumberField:
    return NumberField.create([-2, 0, 1], 1, 2)


def cubic_field() -> NumberField:
    # x^3 - x - 1, real root ~1.3247
    return NumberField.create([-1, -1, 0, 1], 1, 2)


def sqrt5_field() -> NumberField:
    return NumberField.create([-5, 0, 1], 2, 3)


# --------------------------------------------------------------- construction

def test_create_validates_interval():
    with pytest.raises(NoRootInInterval):
        NumberField.create([-2, 0, 1], 2, 3)
    with pytest.raises(MultipleRootsInInterval):
        NumberField.create([-2, 0, 1], -2, 2)


def test_create_rejects_non_squarefree():
    with pytest.raises(NotSquarefree):
        NumberField.create([1, 2, 1], -2, 0)   # (x+1)^2


def test_negative_embedding_is_distinct():
    plus = sqrt2_field()
    minus = NumberField.create([-2, 0, 1], -2, -1)
    assert not plus.same_embedding(minus)
    assert plus.same_embedding(NumberField.create([-2, 0, 1], Fraction(5, 4), Fraction(3, 2)))


# ----------------------------------------------------------------- arithmetic

def test_sqrt2_squares_to_two():
    F = sqrt2_field()
    theta = F.gen()
    assert theta * theta == F.rational(2)


def test_division_pinned_value():
    # 1 / (1 + theta) = -1 + theta  in Q(sqrt 2)
    F = sqrt2_field()
    one = F.one()
    lam = F.element([1, 1])
    assert one / lam == F.element([-1, 1])


def test_division_by_zero():
    F = sqrt2_field()
    with pytest.raises(DivisionByZero):
        F.one() / F.zero()


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        sqrt2_field().one() + sqrt5_field().one()


def test_reducible_polynomial_detected_on_inversion():
    # x^2 - 4 is squarefree but reducible; inverting theta - 2 hits the factor
    F = NumberField.create([-4, 0, 1], 1, 3)
    bad = F.element([-2, 1])
    with pytest.raises(ReduciblePolynomialDetected) as ei:
        bad.inverse()
    assert ei.value.witness is not None


def test_pow_and_inverse():
    F = sqrt2_field()
    lam = F.element([1, 1])            # 1 + sqrt2, a unit
    assert lam ** 2 == F.element([3, 2])
    assert lam ** -1 == F.element([-1, 1])
    assert (lam ** -3) * (lam ** 3) == F.one()


# ----------------------------------------------------------------------- sign

def test_sign_basic():
    F = sqrt2_field()
    theta = F.gen()
    assert theta.sign() == 1
    assert (theta - F.rational(2)).sign() == -1
    assert (theta - F.rational(1)).sign() == 1
    assert F.zero().sign() == 0
    # theta^2 - 2 == 0 exactly
    assert (theta * theta - F.rational(2)).sign() == 0


def test_sign_tight_comparison():
    # sqrt2 vs. close rationals: 99/70 > sqrt2 > 140/99
    F = sqrt2_field()
    theta = F.gen()
    assert (F.rational(Fraction(99, 70)) - theta).sign() == 1
    assert (theta - F.rational(Fraction(140, 99))).sign() == 1
    assert F.rational(Fraction(140, 99)) < theta < F.rational(Fraction(99, 70))


def test_sign_negative_embedding():
    minus = NumberField.create([-2, 0, 1], -2, -1)
    assert minus.gen().sign() == -1


def test_cubic_sign():
    F = cubic_field()
    theta = F.gen()
    # theta ~ 1.3247: theta^2 < theta + 1 ... actually theta^3 = theta + 1
    assert theta ** 3 == theta + F.one()
    assert (theta - F.rational(Fraction(4, 3))).sign() < 0
    assert (theta - F.rational(Fraction(13, 10))).sign() > 0


# ------------------------------------------------------------ min polynomials

def test_minimal_polynomial_of_generator():
    assert sqrt2_field().gen().minimal_polynomial() == (-2, 0, 1)


def test_minimal_polynomial_pinned_unit():
    # 1 + sqrt2 has minimal polynomial x^2 - 2x - 1
    F = sqrt2_field()
    assert F.element([1, 1]).minimal_polynomial() == (-1, -2, 1)


def test_minimal_polynomial_of_rational_in_quadratic_field():
    # rational elements have degree-1 minimal polynomial: x - c (primitive)
    F = sqrt2_field()
    assert F.rational(3).minimal_polynomial() == (-3, 1)
    assert F.rational(Fraction(1, 2)).minimal_polynomial() == (-1, 2)


def test_norm_and_trace():
    F = sqrt2_field()
    lam = F.element([1, 1])
    assert lam.norm() == -1                   # (1+s2)(1-s2) = -1
    assert lam.trace() == 2
    assert F.gen().norm() == -2


def test_serialize_format():
    F = sqrt2_field()
    assert F.element([1, 1]).serialize() == ["1/1", "1/1"]
    assert F.element([Fraction(-1, 2), 3]).serialize() == ["-1/2", "3/1"]


# ----------------------------------------------------------- field axioms (pbt)

coef = st.integers(-6, 6).map(Fraction)


@settings(max_examples=40, deadline=None)
@given(st.tuples(coef, coef), st.tuples(coef, coef), st.tuples(coef, coef))
def test_field_axioms_sqrt2(a, b, c):
    F = sqrt2_field()
    x, y, z = F.element(a), F.element(b), F.element(c)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    if not y.is_zero():
        assert (x / y) * y == x


@settings(max_examples=40, deadline=None)
@given(st.tuples(coef, coef, coef), st.tuples(coef, coef, coef))
def test_field_axioms_cubic(a, b):
    F = cubic_field()
    x, y = F.element(a), F.element(b)
    assert x * y == y * x
    if not y.is_zero():
        assert (x * y) / y == x


@settings(max_examples=30, deadline=None)
@given(st.tuples(coef, coef), st.tuples(coef, coef))
def test_sign_is_multiplicative(a, b):
    F = sqrt2_field()
    x, y = F.element(a), F.element(b)
    assert (x * y).sign() == x.sign() * y.sign()


@settings(max_examples=30, deadline=None)
@given(st.tuples(coef, coef))
def test_minimal_polynomial_annihilates(a):
    F = sqrt2_field()
    x = F.element(a)
    mp = x.minimal_polynomial()
    acc = F.zero()
    for i, c in enumerate(mp):
        acc = acc + (x ** i).scale(c)
    assert acc.is_zero()
