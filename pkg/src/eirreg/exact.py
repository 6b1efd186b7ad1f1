"""Exact Bernoulli and Euler arithmetic over arbitrary-precision rationals.

Conventions
-----------
* Bernoulli numbers follow the first convention, B_1 = -1/2, defined by
  B_0 = 1 and sum_{k=0}^{n-1} C(n+1, k) B_k = -(n+1) B_n.
* Euler numbers E_n are the integers with E_0 = 1 and
  sum_{k == n mod 2, k <= n} C(n, k) E_k = 0 for n >= 1.
* E_n(x) denotes the Euler polynomial, generating function
  2 exp(x t) / (exp(t) + 1).  The package is organised around the values
  E_n(0), whose numerators define E-irregularity of primes.

All rationals are fractions.Fraction instances, hence always in lowest
terms with positive denominator.  Values are memoized in index-addressed
tables; build a table once (e.g. call ``bernoulli(n)``) before sharing it
across threads, since growth itself is not synchronised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SelfCheckError
from .primes import is_prime, prime_factors

__all__ = [
    "bernoulli",
    "bernoulli_denominator",
    "NumeratorSplit",
    "split_k",
    "euler_number",
    "euler_zero",
    "euler_zero_oracle",
    "euler_generating_series",
    "euler_poly_eval",
    "euler_zero_den_valuation",
    "divides_numerator",
    "rational_mod",
]

_bernoulli_cache: list[Fraction] = [Fraction(1)]
_euler_cache: list[int] = [1]
_euler_zero_cache: list[Fraction] = [Fraction(1)]
_euler_zero_oracle_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number, convention B_1 = -1/2.

    >>> bernoulli(1)
    Fraction(-1, 2)
    >>> bernoulli(12)
    Fraction(-691, 2730)
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    cache = _bernoulli_cache
    while len(cache) <= n:
        m = len(cache)
        total = Fraction(0)
        binom = 1  # C(m + 1, k), advanced exactly even past zero summands
        for k in range(m):
            if cache[k]:
                total += binom * cache[k]
            binom = binom * (m + 1 - k) // (k + 1)
        cache.append(-total / (m + 1))
    return cache[n]


def euler_number(n: int) -> int:
    """n-th Euler number (integer; zero at odd index).

    >>> [euler_number(n) for n in range(0, 9, 2)]
    [1, -1, 5, -61, 1385]
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    cache = _euler_cache
    while len(cache) <= n:
        m = len(cache)
        total = 0
        binom = 1  # C(m, k)
        for k in range(m):
            if (m - k) % 2 == 0 and cache[k]:
                total += binom * cache[k]
            binom = binom * (m - k) // (k + 1)
        cache.append(-total)
    return cache[n]


def euler_zero(n: int) -> Fraction:
    """Euler polynomial value E_n(0), via E_n(0) = 2 (1 - 2^(n+1)) B_{n+1} / (n+1).

    >>> euler_zero(3)
    Fraction(1, 4)
    >>> euler_zero(9)
    Fraction(-31, 2)
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    cache = _euler_zero_cache
    while len(cache) <= n:
        m = len(cache)
        cache.append(2 * (1 - 2 ** (m + 1)) * bernoulli(m + 1) / (m + 1))
    return cache[n]


def euler_zero_oracle(n: int) -> Fraction:
    """E_n(0) by an independent route: the recursion E_n(0) = -(1/2) sum_{k<n} C(n, k) E_k(0).

    Shares no code or state with :func:`euler_zero`; the two must agree
    exactly, which the test suite and the acceptance gate both exercise.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    cache = _euler_zero_oracle_cache
    while len(cache) <= n:
        m = len(cache)
        total = Fraction(0)
        binom = 1  # C(m, k)
        for k in range(m):
            if cache[k]:
                total += binom * cache[k]
            binom = binom * (m - k) // (k + 1)
        cache.append(-total / 2)
    return cache[n]


def euler_generating_series(x: Fraction | int, max_n: int) -> tuple[Fraction, ...]:
    """Ground-truth values E_0(x), ..., E_max_n(x) by truncated series division.

    Divides the power series 2 exp(x t) by exp(t) + 1 term by term, then
    rescales the t^n coefficient by n!.  This leans only on the generating
    function itself, so it is the reference the recursions are tested
    against.  Cost is quadratic in max_n; intended for validation, not bulk
    table building.
    """
    if max_n < 0:
        raise ValueError("index must be non-negative")
    x = Fraction(x)
    fact = [1]
    for j in range(1, max_n + 1):
        fact.append(fact[-1] * j)
    numer = [2 * x**j / fact[j] for j in range(max_n + 1)]
    quot: list[Fraction] = []
    for n in range(max_n + 1):
        s = numer[n]
        for j in range(1, n + 1):  # denominator coefficient 1/j! for j >= 1
            s -= quot[n - j] / fact[j]
        quot.append(s / 2)  # denominator constant term is 2
    return tuple(quot[n] * fact[n] for n in range(max_n + 1))


def euler_poly_eval(n: int, x: Fraction | int) -> Fraction:
    """Exact value of the Euler polynomial E_n(x) = sum_k C(n, k) E_k(0) x^(n-k).

    >>> euler_poly_eval(2, Fraction(1, 2))
    Fraction(-1, 4)
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    x = Fraction(x)
    total = Fraction(0)
    power = Fraction(1)  # x^(n-k), grown as k descends
    binom = 1  # C(n, k)
    for k in range(n, -1, -1):
        ez = euler_zero(k)
        if ez:
            total += binom * ez * power
        power *= x
        binom = binom * k // (n - k + 1)
    return total


def bernoulli_denominator(k: int) -> int:
    """Denominator of B_2k: the squarefree product of primes p with (p-1) | 2k.

    Computed from that divisor structure alone, then cross-checked against
    the exact Bernoulli table; a mismatch raises SelfCheckError.

    >>> bernoulli_denominator(6)
    2730
    """
    if k < 1:
        raise ValueError("index must be positive")
    n = 2 * k
    product = 1
    for d in range(1, n + 1):
        if n % d == 0 and is_prime(d + 1):
            product *= d + 1
    exact = bernoulli(n).denominator
    if product != exact:
        raise SelfCheckError(
            f"structural denominator {product} for B_{n} disagrees with exact value {exact}"
        )
    return product


@dataclass(frozen=True)
class NumeratorSplit:
    """Factorisation k = k1 * k2 induced by the denominator of B_2k.

    k2 collects the prime powers of k whose base also divides the
    denominator of B_2k; k1 is the coprime complement and always divides
    the numerator of B_2k.
    """

    k: int
    k1: int
    k2: int


def split_k(k: int) -> NumeratorSplit:
    """Split k against the denominator of B_2k, verifying k1 | numerator(B_2k).

    >>> split_k(6)
    NumeratorSplit(k=6, k1=1, k2=6)
    >>> split_k(7)
    NumeratorSplit(k=7, k1=7, k2=1)
    """
    if k < 1:
        raise ValueError("index must be positive")
    k2 = 1
    for q, e in prime_factors(k).items():
        if (2 * k) % (q - 1) == 0:  # q divides the denominator of B_2k
            k2 *= q**e
    k1 = k // k2
    if bernoulli(2 * k).numerator % k1 != 0:
        raise SelfCheckError(f"k1 = {k1} fails to divide the numerator of B_{2 * k}")
    return NumeratorSplit(k=k, k1=k1, k2=k2)


def euler_zero_den_valuation(n: int) -> int:
    """2-adic valuation of the denominator of E_n(0) for odd n.

    Equals the valuation of n + 1; the denominator is exactly that power of
    two, and the exact table is consulted to confirm it.

    >>> euler_zero_den_valuation(3)
    2
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("index must be odd and positive")
    m = ((n + 1) & -(n + 1)).bit_length() - 1
    den = euler_zero(n).denominator
    if den != 1 << m:
        raise SelfCheckError(f"denominator of E_{n}(0) is {den}, expected 2^{m}")
    return m


def divides_numerator(p: int, value: Fraction | int) -> bool:
    """True when the prime p divides the numerator of value in lowest terms."""
    return Fraction(value).numerator % p == 0


def rational_mod(value: Fraction | int, p: int) -> int:
    """Residue modulo an odd prime p of a rational whose denominator p does not divide.

    The inverse is taken as pow(den, p - 2, p).
    """
    v = Fraction(value)
    den = v.denominator % p
    if den == 0:
        raise ValueError(f"denominator of {v} is divisible by {p}")
    return v.numerator * pow(den, p - 2, p) % p
