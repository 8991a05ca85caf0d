"""Sparse multivariate polynomials with exact coefficients.

Terms are stored as a tuple sorted strictly descending in the ring's monomial
order with no zero coefficients; the zero polynomial is the empty tuple.  The
representation is canonical, so equality and hashing are structural, and every
value is immutable after construction.
"""

from __future__ import annotations

from .rings import PolyRing, check_same_ring, mono_mul


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms=()):
        # Trusted constructor: ``terms`` must already be canonical.
        # Use from_dict for arbitrary input.
        self.ring = ring
        self.terms = tuple(terms)

    @classmethod
    def from_dict(cls, ring: PolyRing, coeffs: dict) -> "Polynomial":
        field = ring.field
        cleaned = {}
        for exps, c in coeffs.items():
            c = field.check(c)
            if c != field.zero:
                exps = tuple(exps)
                if len(exps) != ring.nvars:
                    raise ValueError("exponent vector length does not match ring")
                cleaned[exps] = c
        key = ring.order.key
        ordered = sorted(cleaned.items(), key=lambda t: key(t[0]), reverse=True)
        return cls(ring, ordered)

    @classmethod
    def zero(cls, ring: PolyRing) -> "Polynomial":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: PolyRing, c) -> "Polynomial":
        return cls.from_dict(ring, {ring.unit_monomial(): c})

    @classmethod
    def one(cls, ring: PolyRing) -> "Polynomial":
        return cls.constant(ring, ring.field.one)

    @classmethod
    def variable(cls, ring: PolyRing, name: str) -> "Polynomial":
        i = ring.var_index(name)
        return cls(ring, ((ring.var_monomial(i), ring.field.one),))

    @classmethod
    def term(cls, ring: PolyRing, coeff, exps) -> "Polynomial":
        return cls.from_dict(ring, {tuple(exps): coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def lead_term(self):
        """(exponents, coefficient) of the greatest term."""
        return self.terms[0]

    @property
    def lead_monomial(self):
        return self.terms[0][0]

    @property
    def lead_coeff(self):
        return self.terms[0][1]

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def is_constant(self) -> bool:
        return not self.terms or self.terms == (
            ((0,) * self.ring.nvars, self.terms[0][1]),
        )

    def constant_coeff(self):
        unit = self.ring.unit_monomial()
        for e, c in self.terms:
            if e == unit:
                return c
        return self.ring.field.zero

    def support_variables(self):
        """Indices of variables that occur in some term."""
        seen = set()
        for e, _ in self.terms:
            seen.update(i for i, x in enumerate(e) if x)
        return frozenset(seen)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        check_same_ring(self, other)
        field = self.ring.field
        acc = dict(self.terms)
        for e, c in other.terms:
            s = field.add(acc.get(e, field.zero), c)
            if s == field.zero:
                acc.pop(e, None)
            else:
                acc[e] = s
        return Polynomial.from_dict(self.ring, acc)

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((e, neg(c)) for e, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        check_same_ring(self, other)
        field = self.ring.field
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = mono_mul(e1, e2)
                s = field.add(acc.get(e, field.zero), field.mul(c1, c2))
                if s == field.zero:
                    acc.pop(e, None)
                else:
                    acc[e] = s
        return Polynomial.from_dict(self.ring, acc)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.check(c)
        if c == field.zero:
            return Polynomial.zero(self.ring)
        return Polynomial(
            self.ring, tuple((e, field.mul(c, k)) for e, k in self.terms)
        )

    def mul_term(self, coeff, exps) -> "Polynomial":
        """Multiply by a single term; preserves the descending term order."""
        field = self.ring.field
        coeff = field.check(coeff)
        if coeff == field.zero:
            return Polynomial.zero(self.ring)
        exps = tuple(exps)
        return Polynomial(
            self.ring,
            tuple((mono_mul(e, exps), field.mul(coeff, c)) for e, c in self.terms),
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.lead_coeff
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    # -- comparison and display --------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.variables, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        names = self.ring.variables
        pieces = []
        for e, c in self.terms:
            varpart = "*".join(
                f"{names[i]}^{x}" if x > 1 else names[i]
                for i, x in enumerate(e)
                if x
            )
            mag = field.abs_str(c)
            if varpart:
                body = varpart if mag == "1" else f"{mag}*{varpart}"
            else:
                body = mag
            pieces.append((field.is_negative(c), body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for negative, body in pieces[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self):
        return f"<{self}>"
