"""Buchberger's algorithm and the ideal-theoretic toolkit.

Division is deterministic: divisors are tried in their listed order and the
leading term is always rewritten first.  Pair selection follows the normal
strategy (smallest lcm in the monomial order); the coprime-head and chain
criteria prune the pair set.  Reduced bases are unique, so two runs over
permuted generator lists agree.
"""

from __future__ import annotations

import heapq
import itertools

from . import budget
from .errors import AlgebraError, RingMismatchError
from .polynomials import Polynomial
from .rings import (
    BlockOrder,
    PolyRing,
    check_same_ring,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


def reduce_full(f: Polynomial, divisors, track: bool = False):
    """Remainder of f under the listed divisors, optionally with quotients.

    Returns ``(remainder, quotients)`` where ``quotients[k]`` is the factor of
    ``divisors[k]`` (None unless ``track``).  The remainder has no term
    divisible by any divisor's leading monomial, and f - remainder lies in the
    ideal the divisors generate.
    """
    ring = f.ring
    field = ring.field
    key = ring.order.key
    heads = []
    for k, g in enumerate(divisors):
        check_same_ring(f, g)
        if g.is_zero():
            raise AlgebraError("zero divisor polynomial in reduction")
        heads.append((g.lead_monomial, g.lead_coeff, k, g))
    quotients = [{} for _ in divisors] if track else None

    work = dict(f.terms)
    remainder = {}
    while work:
        lead = max(work, key=key)
        c = work.pop(lead)
        for lm, lc, k, g in heads:
            if mono_divides(lm, lead):
                factor_c = field.div(c, lc)
                factor_e = mono_div(lead, lm)
                if track:
                    q = quotients[k]
                    q[factor_e] = field.add(q.get(factor_e, field.zero), factor_c)
                for e, cg in g.terms[1:]:
                    e2 = mono_mul(e, factor_e)
                    s = field.sub(work.get(e2, field.zero), field.mul(factor_c, cg))
                    if s == field.zero:
                        work.pop(e2, None)
                    else:
                        work[e2] = s
                break
        else:
            remainder[lead] = c
    rem = Polynomial.from_dict(ring, remainder)
    if track:
        return rem, [Polynomial.from_dict(ring, q) for q in quotients]
    return rem, None


def normal_form(f: Polynomial, divisors) -> Polynomial:
    return reduce_full(f, divisors)[0]


def spolynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """The S-polynomial, scaled so both leading terms cancel monically."""
    check_same_ring(f, g)
    field = f.ring.field
    lcm = mono_lcm(f.lead_monomial, g.lead_monomial)
    sf = f.mul_term(field.inv(f.lead_coeff), mono_div(lcm, f.lead_monomial))
    sg = g.mul_term(field.inv(g.lead_coeff), mono_div(lcm, g.lead_monomial))
    return sf - sg


def _interreduce(basis):
    """Minimalize heads, then reduce tails: the unique reduced basis."""
    if not basis:
        return ()
    ring = basis[0].ring
    key = ring.order.key
    minimal = []
    for g in sorted(basis, key=lambda h: key(h.lead_monomial)):
        if not any(mono_divides(h.lead_monomial, g.lead_monomial) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, others).monic() if others else g.monic())
    reduced.sort(key=lambda h: key(h.lead_monomial), reverse=True)
    return tuple(reduced)


def buchberger(gens, use_criteria: bool = True):
    """The reduced Gröbner basis of the ideal the generators span.

    Nonzero generators required (zeros are rejected); the unit ideal is
    detected eagerly and returned as the single basis element 1.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    ring = gens[0].ring
    key = ring.order.key
    basis = []
    for g in gens:
        check_same_ring(gens[0], g)
        if g.is_constant():
            return (Polynomial.one(ring),)
        basis.append(g.monic())

    heads = [g.lead_monomial for g in basis]
    pairs = []
    for i, j in itertools.combinations(range(len(basis)), 2):
        lcm = mono_lcm(heads[i], heads[j])
        heapq.heappush(pairs, (key(lcm), i, j))
    done = set()

    while pairs:
        _, i, j = heapq.heappop(pairs)
        done.add((i, j))
        lcm = mono_lcm(heads[i], heads[j])
        if use_criteria:
            # Coprime heads: the S-polynomial reduces to zero on its own.
            if lcm == mono_mul(heads[i], heads[j]):
                continue
            # Chain criterion: some head divides the lcm and both companion
            # pairs have already been treated.
            if any(
                k != i
                and k != j
                and mono_divides(heads[k], lcm)
                and (min(i, k), max(i, k)) in done
                and (min(j, k), max(j, k)) in done
                for k in range(len(basis))
            ):
                continue
        budget.spend()
        r = normal_form(spolynomial(basis[i], basis[j]), basis)
        if r.is_zero():
            continue
        if r.is_constant():
            return (Polynomial.one(ring),)
        r = r.monic()
        new = len(basis)
        basis.append(r)
        heads.append(r.lead_monomial)
        for k in range(new):
            heapq.heappush(pairs, (key(mono_lcm(heads[k], heads[new])), k, new))

    return _interreduce(basis)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly; raises otherwise."""
    rem, quots = reduce_full(f, [g], track=True)
    if not rem.is_zero():
        raise AlgebraError("polynomial division was not exact")
    return quots[0]


def _fresh_names(ring: PolyRing, count: int, prefix: str = "t"):
    names, k = [], 0
    candidate = prefix
    while len(names) < count:
        if candidate not in ring.variables and candidate not in names:
            names.append(candidate)
        candidate = f"{prefix}{k}"
        k += 1
    return tuple(names)


def _extend_ring(ring: PolyRing, count: int = 1) -> PolyRing:
    """Prepend auxiliary variables under an order that eliminates them."""
    extra = _fresh_names(ring, count)
    order = BlockOrder(
        (tuple(range(count)), tuple(range(count, count + ring.nvars)))
    )
    return PolyRing(ring.field, extra + ring.variables, order)


def _embed(f: Polynomial, ext: PolyRing, shift: int) -> Polynomial:
    pad = (0,) * shift
    return Polynomial.from_dict(ext, {pad + e: c for e, c in f.terms})


def _project(f: Polynomial, ring: PolyRing, shift: int) -> Polynomial:
    return Polynomial.from_dict(ring, {e[shift:]: c for e, c in f.terms})


class Ideal:
    """An ideal with lazily computed, cached reduced Gröbner basis.

    The cached basis is computed once and attached before sharing; all other
    state is immutable, so instances are safe for concurrent reads.
    """

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens=()):
        self.ring = ring
        cleaned = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero():
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb = None

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, (Polynomial.one(ring),))

    def groebner_basis(self):
        if self._gb is None:
            self._gb = buchberger(self.gens)
        return self._gb

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        gb = self.groebner_basis()
        if not gb:
            return False
        return normal_form(f, gb).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        """True iff ``other`` is a subset of this ideal."""
        check_same_ring(self, other)
        return all(self.contains(g) for g in other.gens)

    def sum(self, other: "Ideal") -> "Ideal":
        check_same_ring(self, other)
        return Ideal(self.ring, self.gens + other.gens)

    def product(self, other: "Ideal") -> "Ideal":
        check_same_ring(self, other)
        return Ideal(
            self.ring, tuple(f * g for f in self.gens for g in other.gens)
        )

    __add__ = sum
    __mul__ = product

    def intersection(self, other: "Ideal") -> "Ideal":
        """Computed by eliminating an auxiliary variable t from tI + (1-t)J."""
        check_same_ring(self, other)
        if self.is_zero() or other.is_zero():
            return Ideal.zero(self.ring)
        ext = _extend_ring(self.ring)
        t = Polynomial.variable(ext, ext.variables[0])
        one_minus_t = Polynomial.one(ext) - t
        mixed = [t * _embed(f, ext, 1) for f in self.gens]
        mixed += [one_minus_t * _embed(g, ext, 1) for g in other.gens]
        gb = buchberger(mixed)
        kept = [h for h in gb if all(e[0] == 0 for e, _ in h.terms)]
        return Ideal(self.ring, [_project(h, self.ring, 1) for h in kept])

    def quotient(self, other: "Ideal") -> "Ideal":
        """(self : other); the quotient by the zero ideal is the unit ideal."""
        check_same_ring(self, other)
        if other.is_zero():
            return Ideal.unit(self.ring)
        result = None
        for f in other.gens:
            cap = self.intersection(Ideal(self.ring, (f,)))
            by_f = Ideal(self.ring, [exact_divide(h, f) for h in cap.gens])
            result = by_f if result is None else result.intersection(by_f)
        return result

    def eliminate(self, keep) -> "Ideal":
        """Generators of the contraction to the subring on ``keep`` variables."""
        keep = list(keep)
        for name in keep:
            if name not in self.ring.variables:
                raise KeyError(f"unknown variable {name!r}")
        keep_idx = sorted(self.ring.var_index(n) for n in keep)
        elim_idx = [i for i in range(self.ring.nvars) if i not in keep_idx]
        if not elim_idx:
            return self
        aux = self.ring.with_order(BlockOrder((tuple(elim_idx), tuple(keep_idx))))
        moved = [Polynomial.from_dict(aux, dict(g.terms)) for g in self.gens]
        keep_set = frozenset(keep_idx)
        kept = [
            h for h in buchberger(moved) if h.support_variables() <= keep_set
        ]
        return Ideal(
            self.ring, [Polynomial.from_dict(self.ring, dict(h.terms)) for h in kept]
        )

    def radical_contains(self, f: Polynomial) -> bool:
        """Rabinowitsch: f is in the radical iff 1 is in self + (1 - t f)."""
        if f.ring != self.ring:
            raise RingMismatchError("polynomial from a different ring")
        if f.is_zero():
            return True
        ext = _extend_ring(self.ring)
        t = Polynomial.variable(ext, ext.variables[0])
        gens = [_embed(g, ext, 1) for g in self.gens]
        gens.append(Polynomial.one(ext) - t * _embed(f, ext, 1))
        gb = buchberger(gens)
        return len(gb) == 1 and gb[0].is_constant()

    def dimension(self) -> int:
        """Krull dimension of the quotient ring, -1 for the unit ideal.

        Searches variable subsets S, largest first, for one meeting no lead
        monomial's support; exponential in the variable count by design.
        """
        gb = self.groebner_basis()
        if self.is_unit():
            return -1
        n = self.ring.nvars
        supports = [
            frozenset(i for i, e in enumerate(g.lead_monomial) if e) for g in gb
        ]
        for size in range(n, -1, -1):
            for subset in itertools.combinations(range(n), size):
                s = frozenset(subset)
                if not any(supp <= s for supp in supports):
                    return size
        raise AssertionError("unreachable: the empty set is always independent")

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner_basis() == other.groebner_basis()

    __hash__ = None

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) if self.gens else "0"
        return f"Ideal({inside})"
