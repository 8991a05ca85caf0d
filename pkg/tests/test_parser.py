import random
from fractions import Fraction

import pytest

from cmlocus import LEX, GREVLEX, Polynomial, parse_polynomial
from cmlocus.errors import ParseError
from cmlocus.fields import PrimeField, QQ

from support import p, random_poly, ring


def test_two_term_example():
    r = ring("xyzw")
    f = parse_polynomial("x*z + y*w", r)
    assert f == Polynomial.from_dict(
        r, {(1, 0, 1, 0): Fraction(1), (0, 1, 0, 1): Fraction(1)}
    )


def test_rational_coefficient():
    r = ring("xy")
    f = parse_polynomial("-3/2*x^2", r)
    assert f.terms == (((2, 0), Fraction(-3, 2)),)


def test_unknown_variable_position():
    r = ring("xy")
    with pytest.raises(ParseError) as info:
        parse_polynomial("x*q", r)
    assert info.value.position == 2
    assert "q" in str(info.value)


def test_negative_exponent():
    r = ring("xy")
    with pytest.raises(ParseError) as info:
        parse_polynomial("x^-2", r)
    assert "exponent" in str(info.value)


def test_non_integer_exponent():
    r = ring("xy")
    with pytest.raises(ParseError) as info:
        parse_polynomial("x^y", r)
    assert "exponent" in str(info.value)


def test_division_by_nonconstant():
    r = ring("xy")
    with pytest.raises(ParseError):
        parse_polynomial("x/y", r)
    with pytest.raises(ParseError):
        parse_polynomial("1/0", r)
    assert parse_polynomial("x/2", r) == p(r, "1/2*x")


def test_syntax_errors():
    r = ring("xy")
    for bad in ("x +", "(x", "x y", "* x", "x ^", ""):
        with pytest.raises(ParseError):
            parse_polynomial(bad, r)


def test_unexpected_character():
    r = ring("xy")
    with pytest.raises(ParseError) as info:
        parse_polynomial("x + %", r)
    assert info.value.position == 4


def test_precedence():
    r = ring("xyz")
    assert parse_polynomial("x+y*z^2", r) == p(r, "x") + p(r, "y") * p(r, "z") ** 2
    assert parse_polynomial("-x^2", r) == -(p(r, "x") ** 2)
    assert parse_polynomial("(x+y)^2", r) == p(r, "x+y") ** 2
    assert parse_polynomial("2*-3", r) == Polynomial.constant(r, Fraction(-6))
    assert parse_polynomial("x-y-z", r) == p(r, "x") - p(r, "y") - p(r, "z")


def test_implicit_unary_minus():
    r = ring("xy")
    assert parse_polynomial("-x + -y", r) == -p(r, "x") - p(r, "y")
    assert parse_polynomial("--x", r) == p(r, "x")


def test_zero():
    r = ring("xy")
    assert parse_polynomial("0", r) == Polynomial.zero(r)
    assert parse_polynomial("x - x", r) == Polynomial.zero(r)


def test_roundtrip_randomized():
    rng = random.Random(23)
    rationals = ring("xyz")
    modular = ring("xyz", field=PrimeField(13))
    lexring = ring("xyz", order=LEX)
    for r in (rationals, modular, lexring):
        for _ in range(40):
            f = random_poly(rng, r)
            if r.field != QQ:
                f = Polynomial.from_dict(
                    r, {e: r.field.from_int(rng.randint(0, 12)) for e, _ in f.terms}
                )
            assert parse_polynomial(str(f), r) == f


def test_roundtrip_fractions():
    r = ring("xy")
    f = Polynomial.from_dict(
        r, {(3, 1): Fraction(-7, 3), (0, 0): Fraction(5, 2), (1, 1): Fraction(1)}
    )
    assert parse_polynomial(str(f), r) == f
