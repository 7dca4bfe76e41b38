"""Exact field arithmetic and coefficient pools."""

from fractions import Fraction

import pytest

from nilregular.fields import (
    GF2, GF3, QQ, PrimeField, RationalField, field_from_name)


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)
    PrimeField(31)  # fine


def test_gf2_arithmetic():
    assert GF2.add(1, 1) == 0
    assert GF2.neg(1) == 1
    assert GF2.one == 1 and GF2.zero == 0
    assert GF2.coerce(-3) == 1


def test_gf3_inverse_and_division():
    assert GF3.inv(2) == 2
    assert GF3.div(1, 2) == 2
    with pytest.raises(ZeroDivisionError):
        GF3.inv(0)
    five = PrimeField(5)
    assert five.inv(3) == 2
    assert five.coerce("3/4") == five.mul(3, five.inv(4))


def test_fraction_with_dead_denominator_is_rejected():
    # 1/2 has no meaning mod 2; silent coercion to 0 would corrupt sums
    with pytest.raises(ZeroDivisionError):
        GF2.coerce(Fraction(1, 2))


def test_rational_field_is_exact():
    third = QQ.coerce("1/3")
    assert QQ.mul(third, QQ.coerce(3)) == QQ.one
    assert QQ.add(third, third) == Fraction(2, 3)
    assert QQ.inv(Fraction(7, 2)) == Fraction(2, 7)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)


def test_coefficient_pools():
    pool, exhaustive = GF3.coefficient_pool()
    assert pool == [0, 1, 2]
    assert exhaustive
    grid, exhaustive = QQ.coefficient_pool()
    assert not exhaustive
    assert QQ.one in grid and QQ.zero in grid


def test_field_identity_and_lookup():
    assert field_from_name("gf2") == GF2
    assert field_from_name("gf7") == PrimeField(7)
    assert isinstance(field_from_name("rational"), RationalField)
    assert field_from_name("rational") == QQ
    with pytest.raises(ValueError):
        field_from_name("gf6")
    with pytest.raises(ValueError):
        field_from_name("complex")


def test_names():
    assert GF2.name == "gf2"
    assert QQ.name == "rational"
    assert GF2.to_str(1) == "1"
