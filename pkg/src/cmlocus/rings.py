"""Polynomial ring descriptors, monomial orders, and exponent-vector helpers.

A monomial is a bare tuple of non-negative exponents, one per ring variable.
Orders turn an exponent tuple into a sortable key; "greater key" means
"greater monomial".  The ring descriptor is an immutable value object: two
descriptors with the same field, variables, and order are interchangeable.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import RingMismatchError
from .fields import Field, QQ

Monomial = tuple  # exponent vector; length = number of ring variables


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_deg(a) -> int:
    return sum(a)


def _grevlex_key(exps):
    # Ties by the last nonzero entry of the difference being negative for the
    # larger monomial: reversed negated exponents compare lexicographically.
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MonomialOrder:
    """Total, multiplicative monomial order with 1 as the least monomial."""

    name = "?"

    def key(self, exps):
        raise NotImplementedError

    def _ident(self):
        return (type(self).__name__,)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return self.name


class Lex(MonomialOrder):
    name = "lex"

    def key(self, exps):
        return exps


class Grevlex(MonomialOrder):
    name = "grevlex"

    def key(self, exps):
        return _grevlex_key(exps)


class BlockOrder(MonomialOrder):
    """Elimination order: earlier blocks dominate, grevlex within each block.

    Any monomial involving a variable of the first block is greater than any
    monomial free of it, which is what makes ``eliminate`` work.
    """

    name = "block"

    def __init__(self, blocks):
        self.blocks = tuple(tuple(b) for b in blocks)

    def key(self, exps):
        return tuple(
            _grevlex_key(tuple(exps[i] for i in block)) for block in self.blocks
        )

    def _ident(self):
        return ("BlockOrder", self.blocks)

    def __repr__(self):
        return f"block{list(map(list, self.blocks))}"


LEX = Lex()
GREVLEX = Grevlex()

ORDERS = {"lex": LEX, "grevlex": GREVLEX}


@dataclass(frozen=True)
class PolyRing:
    """Ambient polynomial ring: coefficient field, named variables, order.

    The ring is treated as local at the ideal generated by all variables;
    every locus computed downstream is interpreted at primes contained in it.
    """

    field: Field = dc_field(default_factory=lambda: QQ)
    variables: tuple = ()
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if len(names) < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if any(not n for n in names):
            raise ValueError("variable names must be nonempty")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def unit_monomial(self):
        return (0,) * self.nvars

    def var_monomial(self, i: int):
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.variables, order)

    def __repr__(self):
        return f"{self.field.name}[{','.join(self.variables)}]/{self.order!r}"


def compare_monomials(a, b, ring: PolyRing) -> int:
    """-1, 0, or 1 as a is smaller than, equal to, or greater than b."""
    if len(a) != ring.nvars or len(b) != ring.nvars:
        raise RingMismatchError("exponent vector length does not match ring")
    ka, kb = ring.order.key(tuple(a)), ring.order.key(tuple(b))
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def check_same_ring(a, b) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"mixed rings: {a.ring!r} vs {b.ring!r}")
