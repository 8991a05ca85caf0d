"""Depth, dimension, pseudo supports, and the non-Cohen-Macaulay locus of
finitely generated modules over polynomial rings, on top of a self-contained
Gröbner-basis engine with exact coefficients.
"""

from .budget import step_budget
from .duality import DeficiencyData, deficiency_modules, ext_module
from .errors import (
    AlgebraError,
    BudgetExceededError,
    FieldMismatchError,
    ImageNotContainedError,
    NotInSupportError,
    ParseError,
    RingMismatchError,
    SessionError,
    VerificationError,
    ZeroModuleError,
)
from .fields import PrimeField, QQ, RationalField
from .groebner import Ideal, buchberger, normal_form, spolynomial
from .locus import (
    LocusReport,
    PrimeIdeal,
    build_report,
    depth_dim_at_prime,
    is_cm_at_prime,
    is_equidimensional,
    monomial_primes_oracle,
    ncm_T_ideal,
    ncm_a_ideal,
    psd,
    psupp_ideal,
    serre_condition,
    shallow_locus_ideal,
)
from .modules import (
    FreeElement,
    PolyMatrix,
    PresentedModule,
    Resolution,
    annihilator,
    free_resolution,
    is_zero_module,
    kernel,
    module_buchberger,
    subquotient_presentation,
)
from .parser import parse_polynomial
from .polynomials import Polynomial
from .rings import (
    GREVLEX,
    LEX,
    BlockOrder,
    Grevlex,
    Lex,
    PolyRing,
    compare_monomials,
)
from .session import parse_session

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BlockOrder",
    "BudgetExceededError",
    "DeficiencyData",
    "FieldMismatchError",
    "FreeElement",
    "GREVLEX",
    "Grevlex",
    "Ideal",
    "ImageNotContainedError",
    "LEX",
    "Lex",
    "LocusReport",
    "NotInSupportError",
    "ParseError",
    "PolyMatrix",
    "PolyRing",
    "Polynomial",
    "PresentedModule",
    "PrimeField",
    "PrimeIdeal",
    "QQ",
    "RationalField",
    "Resolution",
    "RingMismatchError",
    "SessionError",
    "VerificationError",
    "ZeroModuleError",
    "annihilator",
    "buchberger",
    "build_report",
    "compare_monomials",
    "deficiency_modules",
    "depth_dim_at_prime",
    "ext_module",
    "free_resolution",
    "is_cm_at_prime",
    "is_equidimensional",
    "is_zero_module",
    "kernel",
    "module_buchberger",
    "monomial_primes_oracle",
    "ncm_T_ideal",
    "ncm_a_ideal",
    "normal_form",
    "parse_polynomial",
    "parse_session",
    "psd",
    "psupp_ideal",
    "serre_condition",
    "shallow_locus_ideal",
    "spolynomial",
    "step_budget",
    "subquotient_presentation",
]
