"""Exact and modular arithmetic for primes that are irregular with respect to Euler polynomials.

A prime p is E-irregular when it divides the numerator of an Euler
polynomial value E_n(0) for some odd n <= p - 2.  The package computes the
underlying Bernoulli / Euler tables exactly, sieves irregular and
E-irregular indices modulo p, certifies E-irregularity from the
multiplicative order of 2, evaluates exact relative refined class numbers
in cyclotomic integer rings, and cross-checks every route against the
others.
"""

from __future__ import annotations

from .cache import CacheRecord, append_cache, read_cache
from .checks import CheckResult, run_suite
from .classnum import (
    CLASSNUM_CEILING,
    ClassNumberReport,
    CyclotomicInt,
    cyc_mul,
    cyclotomic_poly,
    discrete_log_table,
    gen_euler_e0,
    relative_refined_class_number,
    verify_character_congruence,
)
from .distribution import (
    ArtinEstimate,
    OrderProfile,
    ScanReport,
    artin_constant,
    order_of_two,
    profile,
    profile_many,
    scan,
)
from .errors import SelfCheckError
from .exact import (
    NumeratorSplit,
    bernoulli,
    bernoulli_denominator,
    divides_numerator,
    euler_generating_series,
    euler_number,
    euler_poly_eval,
    euler_zero,
    euler_zero_den_valuation,
    euler_zero_oracle,
    rational_mod,
    split_k,
)
from .primes import (
    is_prime,
    multiplicative_order,
    prime_factors,
    sieve_primes,
    smallest_primitive_root,
)
from .sieve import (
    PrimeClassification,
    alt_power_sum,
    alt_power_sum_table,
    bernoulli_mod_table,
    classify,
    e_irregular_indices,
    irregular_indices,
    is_wieferich,
)

__version__ = "0.1.0"

__all__ = [
    "ArtinEstimate",
    "CacheRecord",
    "CheckResult",
    "CLASSNUM_CEILING",
    "ClassNumberReport",
    "CyclotomicInt",
    "NumeratorSplit",
    "OrderProfile",
    "PrimeClassification",
    "ScanReport",
    "SelfCheckError",
    "alt_power_sum",
    "alt_power_sum_table",
    "append_cache",
    "artin_constant",
    "bernoulli",
    "bernoulli_denominator",
    "bernoulli_mod_table",
    "classify",
    "cyc_mul",
    "cyclotomic_poly",
    "discrete_log_table",
    "divides_numerator",
    "e_irregular_indices",
    "euler_generating_series",
    "euler_number",
    "euler_poly_eval",
    "euler_zero",
    "euler_zero_den_valuation",
    "euler_zero_oracle",
    "gen_euler_e0",
    "irregular_indices",
    "is_prime",
    "is_wieferich",
    "multiplicative_order",
    "order_of_two",
    "prime_factors",
    "profile",
    "profile_many",
    "rational_mod",
    "read_cache",
    "relative_refined_class_number",
    "run_suite",
    "scan",
    "sieve_primes",
    "smallest_primitive_root",
    "split_k",
    "verify_character_congruence",
]
