"""Brute-force depth oracles, independent of the duality pipeline.

Depth of a quotient (local at the irrelevant maximal ideal) is found the slow
classical way: search a linear form that is a non-zerodivisor, pass to the
quotient by it, and stop when the maximal ideal turns associated (the socle
test (J : m) != J fires).  Only ideal quotients and comparisons are used, so
this path shares nothing with Ext, resolutions, or annihilators and can
cross-check them.

Localization of a monomial quotient at a variable prime is the usual
substitution: set the variables outside the prime to 1, land in the smaller
polynomial ring on the prime's variables, and measure depth/dimension there.
"""

from __future__ import annotations

import random

from .errors import AlgebraError
from .groebner import Ideal
from .polynomials import Polynomial
from .rings import GREVLEX, PolyRing


def irrelevant_ideal(ring: PolyRing) -> Ideal:
    return Ideal(
        ring, tuple(Polynomial.variable(ring, v) for v in ring.variables)
    )


def is_regular_element(ideal: Ideal, f: Polynomial) -> bool:
    """f is a non-zerodivisor on R/ideal iff (ideal : f) = ideal."""
    return ideal.quotient(Ideal(ideal.ring, (f,))) == ideal


def _linear_form_candidates(ring: PolyRing, tries: int = 40, seed: int = 11):
    """Variables, sums of two or three variables, then seeded random forms."""
    n = ring.nvars
    for i in range(n):
        yield Polynomial.variable(ring, ring.variables[i])
    for i in range(n):
        for j in range(i + 1, n):
            yield (
                Polynomial.variable(ring, ring.variables[i])
                + Polynomial.variable(ring, ring.variables[j])
            )
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                yield (
                    Polynomial.variable(ring, ring.variables[i])
                    + Polynomial.variable(ring, ring.variables[j])
                    + Polynomial.variable(ring, ring.variables[k])
                )
    rng = random.Random(seed)
    field = ring.field
    for _ in range(tries):
        coeffs = [field.from_int(rng.randint(1, 7)) for _ in range(n)]
        form = Polynomial.from_dict(
            ring, {ring.var_monomial(i): coeffs[i] for i in range(n)}
        )
        yield form


def quotient_depth(ideal: Ideal) -> int:
    """Depth of R/ideal at the irrelevant maximal ideal, by brute force.

    Works for any proper ideal over the rationals; each round either detects
    depth zero by the socle test or extends the regular sequence by a linear
    form.
    """
    ring = ideal.ring
    if ideal.is_unit():
        raise AlgebraError("depth of the zero module is undefined")
    m = irrelevant_ideal(ring)
    current = ideal
    depth = 0
    while depth <= ring.nvars:
        if current.quotient(m) != current:
            return depth
        for f in _linear_form_candidates(ring):
            if is_regular_element(current, f):
                current = current.sum(Ideal(ring, (f,)))
                depth += 1
                break
        else:
            raise AlgebraError(
                "no regular linear form found; the candidate pool is too small"
            )
    raise AssertionError("depth exceeded the variable count")


def localize_monomial_quotient(ideal: Ideal, prime_vars):
    """(subring, ideal) after setting the variables outside the prime to 1.

    Returns None when the localized module vanishes (some generator maps to a
    unit), which happens exactly when the ideal is not inside the prime.
    """
    ring = ideal.ring
    keep = sorted(
        ring.var_index(v) if isinstance(v, str) else int(v) for v in prime_vars
    )
    if not keep:
        # Localizing at the zero prime: the module survives iff the ideal is zero.
        sub = PolyRing(ring.field, ("_u",), GREVLEX)
        return (sub, Ideal.zero(sub)) if ideal.is_zero() else None
    sub = PolyRing(ring.field, tuple(ring.variables[i] for i in keep), GREVLEX)
    gens = []
    for g in ideal.gens:
        if len(g.terms) != 1:
            raise ValueError("non-monomial generator")
        exps = g.terms[0][0]
        restricted = tuple(exps[i] for i in keep)
        if sum(restricted) == 0:
            return None  # generator became a unit: localization vanishes
        gens.append(Polynomial.term(sub, sub.field.one, restricted))
    return sub, Ideal(sub, tuple(gens))


def localized_depth_dim(ideal: Ideal, prime_vars):
    """(depth, dim) of the monomial quotient localized at a variable prime.

    None when the prime is outside the support.  Faithfully flat descent to
    the subring on the prime's variables keeps both numbers intact.
    """
    localized = localize_monomial_quotient(ideal, prime_vars)
    if localized is None:
        return None
    sub, j = localized
    return quotient_depth(j), j.dimension()
