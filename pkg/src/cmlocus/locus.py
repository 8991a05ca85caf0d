"""Pseudo supports, localized depth and dimension, non-CM locus, Serre tests.

All loci are returned as ideals and compared at the radical level: the i-th
pseudo support is the variety of the i-th deficiency annihilator a_i, the
non-CM locus is cut out either by the intersection of the pairwise sums
a_i + a_j (i < j) or by the product a_0 ... a_{dim-1}, and localized depth and
dimension at a prime p are read off the indices i with a_i contained in p.
Primes generated by variables are verified structurally; anything else must
be asserted by the caller.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .duality import DeficiencyData
from .errors import AlgebraError, NotInSupportError
from .groebner import Ideal
from .modules import PresentedModule, annihilator
from .polynomials import Polynomial
from .rings import PolyRing

MONOMIAL_VERIFIED = "monomial-verified"
USER_ASSERTED = "user-asserted"


class PrimeIdeal:
    """A prime with provenance: structurally verified or caller-asserted.

    Variable-generated primes are checked to be exactly that; general primes
    are only checked to be proper and contained in the irrelevant maximal
    ideal (no constant terms), primality itself being asserted.
    """

    __slots__ = ("ideal", "provenance", "variable_indices")

    def __init__(self, ideal: Ideal, provenance: str, variable_indices=None):
        self.ideal = ideal
        self.provenance = provenance
        self.variable_indices = (
            tuple(sorted(variable_indices)) if variable_indices is not None else None
        )

    @classmethod
    def from_variables(cls, ring: PolyRing, names) -> "PrimeIdeal":
        indices = sorted(
            ring.var_index(n) if isinstance(n, str) else int(n) for n in names
        )
        if len(set(indices)) != len(indices):
            raise ValueError("repeated variable in prime")
        if any(not 0 <= i < ring.nvars for i in indices):
            raise ValueError("variable index out of range")
        gens = tuple(
            Polynomial.variable(ring, ring.variables[i]) for i in indices
        )
        return cls(Ideal(ring, gens), MONOMIAL_VERIFIED, indices)

    @classmethod
    def asserted(cls, ideal: Ideal) -> "PrimeIdeal":
        if ideal.is_unit():
            raise AlgebraError("a prime ideal must be proper")
        for g in ideal.gens:
            if g.constant_coeff() != ideal.ring.field.zero:
                raise AlgebraError(
                    "prime not contained in the irrelevant maximal ideal"
                )
        return cls(ideal, USER_ASSERTED)

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def dimension(self) -> int:
        if self.variable_indices is not None:
            return self.ring.nvars - len(self.variable_indices)
        return self.ideal.dimension()

    def __eq__(self, other):
        return isinstance(other, PrimeIdeal) and self.ideal == other.ideal

    __hash__ = None

    def __repr__(self):
        if self.variable_indices is not None:
            names = ", ".join(
                self.ring.variables[i] for i in self.variable_indices
            )
            return f"Prime({names or '0'})"
        return f"Prime({self.ideal!r}, asserted)"


def psupp_ideal(data: DeficiencyData, i: int) -> Ideal:
    """The ideal whose variety is the i-th pseudo support."""
    return data.annihilator_of(i)


def psd(data: DeficiencyData, i: int) -> int:
    """Pseudo dimension: dim of the i-th annihilator, -1 for an empty locus."""
    return data.annihilator_of(i).dimension()


def _support_indices(data: DeficiencyData, prime: PrimeIdeal):
    return [
        i
        for i in range(data.top + 1)
        if prime.ideal.contains_ideal(data.annihilators[i])
    ]


def depth_dim_at_prime(data: DeficiencyData, prime: PrimeIdeal):
    """(depth, dim) of the module localized at the prime.

    depth = k - dim(R/p) and dim = t - dim(R/p) where k and t are the least
    and greatest i with a_i contained in p.
    """
    if prime.ring != data.ring:
        raise AlgebraError("prime from a different ring")
    indices = _support_indices(data, prime)
    if not indices:
        raise NotInSupportError(
            "prime does not contain the annihilator of the module"
        )
    codim = prime.dimension()
    return (min(indices) - codim, max(indices) - codim)


def is_cm_at_prime(data: DeficiencyData, prime: PrimeIdeal) -> bool:
    depth, dim = depth_dim_at_prime(data, prime)
    return depth == dim


def ncm_T_ideal(data: DeficiencyData) -> Ideal:
    """Intersection over i < j of (a_i + a_j); its variety is the non-CM locus.

    Pairs with a unit summand contribute nothing and are skipped; a module
    with at most one nonvanishing deficiency index gets the unit ideal.
    """
    proper = [
        i for i in range(data.dim + 1) if not data.annihilators[i].is_unit()
    ]
    result = None
    for i, j in itertools.combinations(proper, 2):
        pair_sum = data.annihilators[i].sum(data.annihilators[j])
        result = pair_sum if result is None else result.intersection(pair_sum)
    return result if result is not None else Ideal.unit(data.ring)


def ncm_a_ideal(data: DeficiencyData) -> Ideal:
    """The product of the annihilators below dim, unit factors dropped."""
    result = None
    for i in range(data.dim):
        a_i = data.annihilators[i]
        if a_i.is_unit():
            continue
        result = a_i if result is None else result.product(a_i)
    return result if result is not None else Ideal.unit(data.ring)


def shallow_locus_ideal(data: DeficiencyData, s: int) -> Ideal:
    """Product of a_i for i <= s; cuts out primes with depth + codim <= s."""
    if not 0 <= s <= data.dim:
        raise ValueError(f"level {s} out of range 0..{data.dim}")
    result = None
    for i in range(s + 1):
        a_i = data.annihilators[i]
        if a_i.is_unit():
            continue
        result = a_i if result is None else result.product(a_i)
    return result if result is not None else Ideal.unit(data.ring)


def serre_condition(data: DeficiencyData, r: int) -> bool:
    """S_r via pseudo dimensions: psd(i) <= i - r for every i below dim.

    Indices with an empty pseudo support are vacuously fine (their pseudo
    dimension is a max over nothing, not -1), otherwise CM modules would fail
    high Serre levels.
    """
    if r < 0:
        raise ValueError("Serre level must be non-negative")
    return all(
        psd(data, i) <= i - r
        for i in range(data.dim)
        if not data.annihilators[i].is_unit()
    )


# -- monomial oracle ---------------------------------------------------------


def _monomial_exponents(ideal: Ideal):
    exps = []
    for g in ideal.gens:
        if len(g.terms) != 1:
            raise ValueError("non-monomial generator")
        exps.append(g.terms[0][0])
    # Drop redundant generators (divisible by another).
    minimal = []
    for e in sorted(exps, key=sum):
        if not any(all(x <= y for x, y in zip(m, e)) for m in minimal):
            minimal.append(e)
    return minimal


def monomial_primes_oracle(ideal: Ideal):
    """(minimal primes, associated primes) of a monomial ideal, brute force.

    Minimal primes are the minimal variable subsets meeting every generator's
    support.  Associated primes are the variable primes of the form (I : f),
    with f searched over the divisors of the lcm of the generators (every
    associated prime of a monomial ideal has such a witness; the search space
    sits inside the max-degree-times-variables bound).
    """
    ring = ideal.ring
    n = ring.nvars
    exps = _monomial_exponents(ideal)
    if any(sum(e) == 0 for e in exps):
        return [], []  # unit ideal: empty variety
    if not exps:
        zero = PrimeIdeal.from_variables(ring, ())
        return [zero], [zero]

    supports = [frozenset(i for i, x in enumerate(e) if x) for e in exps]
    minimal_primes = []
    kept = []
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            s = frozenset(subset)
            if any(k <= s for k in kept):
                continue
            if all(supp & s for supp in supports):
                kept.append(s)
                minimal_primes.append(PrimeIdeal.from_variables(ring, subset))

    lcm = [max(e[i] for e in exps) for i in range(n)]
    associated = []
    seen = set()
    for witness in itertools.product(*(range(x + 1) for x in lcm)):
        if any(all(x <= y for x, y in zip(e, witness)) for e in exps):
            continue  # witness inside the ideal: colon is the unit ideal
        colon = [
            tuple(max(x - y, 0) for x, y in zip(e, witness)) for e in exps
        ]
        reduced = []
        for e in sorted(colon, key=sum):
            if not any(all(x <= y for x, y in zip(m, e)) for m in reduced):
                reduced.append(e)
        prime_vars = set()
        is_prime = True
        for e in reduced:
            if sum(e) == 1:
                prime_vars.add(e.index(1))
            else:
                is_prime = False
                break
        if is_prime and prime_vars:
            key = tuple(sorted(prime_vars))
            if key not in seen:
                seen.add(key)
                associated.append(PrimeIdeal.from_variables(ring, key))

    def sort_key(p):
        return (len(p.variable_indices), p.variable_indices)

    minimal_primes.sort(key=sort_key)
    associated.sort(key=sort_key)
    return minimal_primes, associated


def is_equidimensional(module: PresentedModule):
    """True/False when the annihilator is monomial, None when undecidable."""
    ann = annihilator(module)
    gb = ann.groebner_basis()
    if any(len(g.terms) != 1 for g in gb):
        return None
    mins, _ = monomial_primes_oracle(Ideal(module.ring, gb))
    if not mins:
        return None  # unit annihilator: the zero module has no dimension
    dims = {p.dimension() for p in mins}
    return len(dims) == 1


# -- report ------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeResult:
    name: str
    depth: int
    dim: int
    cm: bool


@dataclass(frozen=True)
class LocusReport:
    """Everything the report command emits for one module."""

    data: DeficiencyData
    psd_table: tuple
    t_ideal: Ideal
    a_ideal: Ideal
    serre: dict
    primes: tuple
    equidimensional: str  # "true" | "false" | "unknown-asserted"


def build_report(
    data: DeficiencyData,
    primes=(),
    assert_equidimensional: bool = False,
) -> LocusReport:
    """Assemble the full locus report; primes outside the support are skipped."""
    psd_table = tuple(psd(data, i) for i in range(data.top + 1))
    verdict = is_equidimensional(data.module)
    if verdict is None:
        equi = "true" if assert_equidimensional else "unknown-asserted"
    else:
        equi = "true" if verdict else "false"
    serre = {r: serre_condition(data, r) for r in range(1, data.dim + 1)}
    results = []
    for name, prime in primes:
        try:
            depth, dim = depth_dim_at_prime(data, prime)
        except NotInSupportError:
            continue
        results.append(PrimeResult(name, depth, dim, depth == dim))
    return LocusReport(
        data=data,
        psd_table=psd_table,
        t_ideal=ncm_T_ideal(data),
        a_ideal=ncm_a_ideal(data),
        serre=serre,
        primes=tuple(results),
        equidimensional=equi,
    )
