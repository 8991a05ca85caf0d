"""Shared helpers for the test suite: builders, random generators, oracles."""

from __future__ import annotations

import itertools
import math
import random

from cmlocus import (
    GREVLEX,
    Ideal,
    PolyRing,
    Polynomial,
    PresentedModule,
    parse_polynomial,
)
from cmlocus.fields import QQ


def ring(letters, field=QQ, order=GREVLEX) -> PolyRing:
    return PolyRing(field, tuple(letters), order)


def p(r: PolyRing, text: str) -> Polynomial:
    return parse_polynomial(text, r)


def ideal(r: PolyRing, *exprs) -> Ideal:
    return Ideal(r, tuple(parse_polynomial(e, r) for e in exprs))


def quotient_module(r: PolyRing, *exprs) -> PresentedModule:
    return PresentedModule.from_quotient(ideal(r, *exprs))


def random_poly(rng, r: PolyRing, max_deg=3, max_terms=3, homogeneous=False):
    n = r.nvars
    acc = {}
    deg = rng.randint(1, max_deg)
    for _ in range(rng.randint(1, max_terms)):
        d = deg if homogeneous else rng.randint(0, max_deg)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        acc[tuple(e)] = QQ.from_int(rng.randint(-3, 3))
    return Polynomial.from_dict(r, acc)


def random_monomial_ideal(rng, r: PolyRing, max_deg=3, max_gens=4) -> Ideal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        e = [0] * r.nvars
        for _ in range(rng.randint(1, max_deg)):
            e[rng.randrange(r.nvars)] += 1
        gens.append(Polynomial.term(r, QQ.one, e))
    return Ideal(r, gens)


# The monomial modules exercised by the exhaustive locus checks: at most six
# variables, a mix of CM, non-CM, equidimensional and mixed-dimension cases.
MONOMIAL_SUITE = (
    ("two-planes", "xyzw", ("x*z", "x*w", "y*z", "y*w")),
    ("line-and-plane", "xyz", ("x*y", "x*z")),
    ("embedded-point", "xyzw", ("x^2", "x*y")),
    ("complete-intersection", "xyzuvw", ("x*u", "y*v", "z*w")),
    ("two-planes-in-six", "xyzuvw", ("x*z", "x*u", "y*z", "y*u")),
    ("triple-line", "xyz", ("x^2", "x*y", "y^2")),
)


def suite_cases():
    for name, letters, gens in MONOMIAL_SUITE:
        r = ring(letters)
        yield name, r, ideal(r, *gens)


def monomial_exponents(i: Ideal):
    exps = []
    for g in i.gens:
        assert len(g.terms) == 1, "suite ideals must be monomial"
        exps.append(g.terms[0][0])
    minimal = []
    for e in sorted(exps, key=sum):
        if not any(all(a <= b for a, b in zip(m, e)) for m in minimal):
            minimal.append(e)
    return minimal


def hilbert_growth_dimension(i: Ideal) -> int:
    """Dimension of R/I for monomial I, from standard-monomial growth.

    Counts monomials of degree <= t outside I by inclusion-exclusion over
    generator subsets, then reads off the degree of the eventual polynomial
    from a difference table.  Completely independent of Gröbner machinery.
    """
    r = i.ring
    n = r.nvars
    gens = monomial_exponents(i)
    if any(sum(e) == 0 for e in gens):
        return -1

    def count_multiples_upto(m, t):
        # monomials of degree <= t divisible by x^m
        rem = t - sum(m)
        return math.comb(rem + n, n) if rem >= 0 else 0

    def standard_count(t):
        total = 0
        for rsize in range(len(gens) + 1):
            for subset in itertools.combinations(gens, rsize):
                lcm = tuple(max(col) for col in zip(*subset)) if subset else (0,) * n
                total += (-1) ** rsize * count_multiples_upto(lcm, t)
        return total

    top = max((sum(e) for e in gens), default=0)
    start = len(gens) * top + 1  # past this the count is a polynomial in t
    values = [standard_count(t) for t in range(start, start + n + 3)]
    level = 0
    while len(values) > 1:
        if all(v == values[0] for v in values):
            return level if values[0] != 0 else -1
        values = [b - a for a, b in zip(values, values[1:])]
        level += 1
    raise AssertionError("difference table did not stabilize")
