from fractions import Fraction

import pytest

from cmlocus.errors import FieldMismatchError
from cmlocus.fields import PrimeField, QQ, field_from_spec, is_prime


def test_rational_add():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_prime_field_inverse():
    assert PrimeField(7).inv(3) == 5


def test_rational_normalization():
    assert QQ.from_ratio(2, -4) == Fraction(-1, 2)
    assert QQ.from_ratio(2, -4) == QQ.neg(Fraction(1, 2))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        PrimeField(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.from_ratio(1, 0)
    with pytest.raises(ZeroDivisionError):
        PrimeField(5).from_ratio(1, 10)


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        PrimeField(7).add(Fraction(1, 2), 3)
    with pytest.raises(FieldMismatchError):
        PrimeField(7).check(9)
    with pytest.raises(FieldMismatchError):
        PrimeField(7).check(-1)
    with pytest.raises(FieldMismatchError):
        QQ.check("x")
    with pytest.raises(FieldMismatchError):
        QQ.check(True)


def test_prime_field_arithmetic_wraps():
    f = PrimeField(7)
    assert f.add(5, 4) == 2
    assert f.mul(3, 5) == 1
    assert f.neg(2) == 5
    assert f.sub(1, 3) == 5
    assert f.div(1, 3) == 5
    assert f.from_int(-1) == 6
    assert f.from_ratio(1, 2) == 4  # 2 * 4 = 8 = 1 mod 7


def test_rational_div_sub():
    assert QQ.div(Fraction(1, 2), Fraction(3)) == Fraction(1, 6)
    assert QQ.sub(Fraction(1), Fraction(1, 4)) == Fraction(3, 4)


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 32003, 2**31 - 1}
    for n in primes:
        assert is_prime(n)
    for n in (0, 1, 4, 9, 15, 32001, 2**31 - 3):
        assert not is_prime(n)


def test_field_from_spec():
    assert field_from_spec("qq") == QQ
    assert field_from_spec("fp:13") == PrimeField(13)
    with pytest.raises(ValueError):
        field_from_spec("fp:abc")
    with pytest.raises(ValueError):
        field_from_spec("gf(7)")


def test_equality_and_hash():
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(11)
    assert QQ != PrimeField(7)
    assert hash(PrimeField(7)) == hash(PrimeField(7))
