"""Coefficient fields with exact arithmetic.

Two fields are supported: the rationals, whose elements are
:class:`fractions.Fraction` values (canonically normalized by construction,
positive denominator and reduced), and prime fields, whose elements are plain
``int`` residues in ``[0, p)``.  A field object validates and operates on raw
element values; it never wraps them.  Equal elements therefore always have
identical representations, which is what makes polynomial equality structural.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every modulus below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Stateless field of coefficients; subclasses define the element type."""

    name = "?"

    def check(self, a):
        """Validate (and canonicalize) a raw element value, or raise."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        raise NotImplementedError

    def from_ratio(self, num: int, den: int):
        """The element num/den; the canonical home of ``a/b`` literals."""
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def is_zero(self, a) -> bool:
        return self.check(a) == self.zero

    def is_negative(self, a) -> bool:
        """Whether printing should use a minus sign (never in a prime field)."""
        return False

    def abs_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name


class RationalField(Field):
    """The rationals; elements are ``Fraction`` (ints are accepted and coerced)."""

    name = "QQ"

    def check(self, a):
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int) and not isinstance(a, bool):
            return Fraction(a)
        raise FieldMismatchError(f"{a!r} is not a rational field element")

    def add(self, a, b):
        return self.check(a) + self.check(b)

    def mul(self, a, b):
        return self.check(a) * self.check(b)

    def neg(self, a):
        return -self.check(a)

    def inv(self, a):
        a = self.check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def from_ratio(self, num, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return Fraction(num, den)

    def is_negative(self, a):
        return a < 0

    def abs_str(self, a):
        return str(abs(a))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """The field of p elements; elements are ints in ``[0, p)``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def check(self, a):
        if isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.p:
            return a
        raise FieldMismatchError(f"{a!r} is not a residue mod {self.p}")

    def add(self, a, b):
        return (self.check(a) + self.check(b)) % self.p

    def mul(self, a, b):
        return self.check(a) * self.check(b) % self.p

    def neg(self, a):
        return -self.check(a) % self.p

    def inv(self, a):
        a = self.check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def from_ratio(self, num, den):
        den = den % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes mod {self.p}")
        return num % self.p * pow(den, -1, self.p) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


def field_from_spec(spec: str) -> Field:
    """Parse a field tag: ``qq`` or ``fp:P`` (case-insensitive)."""
    tag = spec.strip().lower()
    if tag == "qq":
        return QQ
    if tag.startswith("fp:"):
        try:
            p = int(tag[3:])
        except ValueError:
            raise ValueError(f"bad prime field spec {spec!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field spec {spec!r} (expected qq or fp:P)")
