"""Exact relative refined class numbers via cyclotomic integer arithmetic.

For an odd prime p, work in Z[x]/Phi_{p-1}(x), a model of the cyclotomic
integers of conductor p - 1.  With g the least primitive root mod p and
ind_g the discrete logarithm, the generalised Euler value attached to the
odd power k of the character sending g to a root of unity is

    E0(k) = sum_{a=1}^{p-1} (-1)^a x^(k ind_g(a))  (mod Phi_{p-1}).

The product of E0(k) over odd k is fixed by the Galois action, hence a
rational integer; dividing by 2^(p-2) and applying the parity sign
(-1)^((p-1)/2) yields the relative class number of the p-th cyclotomic
field refined at 2 (the factor attached to places above 2 removed).  That
integer is divisible by p exactly when p is E-irregular, which doubles as
an end-to-end cross-check of the modular sieve.

Everything is exact integer arithmetic; no floating point enters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import SelfCheckError
from .exact import euler_zero, rational_mod
from .primes import is_prime, smallest_primitive_root
from .sieve import e_irregular_indices

__all__ = [
    "cyclotomic_poly",
    "CyclotomicInt",
    "cyc_mul",
    "discrete_log_table",
    "gen_euler_e0",
    "ClassNumberReport",
    "relative_refined_class_number",
    "verify_character_congruence",
    "CLASSNUM_CEILING",
]

# Degrees phi(p - 1) stay modest here; coefficients grow like 2^p, which is
# why the exact product is capped rather than the algorithm changed.
CLASSNUM_CEILING = 200

_cyclo_cache: dict[int, tuple[int, ...]] = {}


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Quotient of polynomials with integer coefficients, den monic; remainder must vanish."""
    num = list(num)
    d = len(den) - 1
    out = [0] * (len(num) - d)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + d]
        out[i] = c
        if c:
            for j in range(d + 1):
                num[i + j] -= c * den[j]
    if any(num):
        raise SelfCheckError("cyclotomic division left a remainder")
    return out


def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first.

    Built by dividing x^m - 1 by Phi_d for every proper divisor d of m;
    results are cached, so repeated queries cost a lookup.

    >>> cyclotomic_poly(12)
    (1, 0, -1, 0, 1)
    """
    if m < 1:
        raise ValueError("order must be positive")
    cached = _cyclo_cache.get(m)
    if cached is not None:
        return cached
    coeffs = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            coeffs = _exact_div(coeffs, cyclotomic_poly(d))
    result = tuple(coeffs)
    _cyclo_cache[m] = result
    return result


def _reduce(raw: list[int], phi: tuple[int, ...]) -> tuple[int, ...]:
    """Residue of a coefficient list modulo the monic polynomial phi."""
    deg = len(phi) - 1
    work = list(raw)
    if len(work) < deg:
        work += [0] * (deg - len(work))
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            work[i] = 0
            for j in range(deg):
                work[i - deg + j] -= c * phi[j]
    return tuple(work[:deg])


@dataclass(frozen=True)
class CyclotomicInt:
    """Element of Z[x]/Phi_order(x) with coefficients in the power basis.

    Construct through :meth:`from_coeffs` (which reduces) or arithmetic on
    existing elements; the raw constructor trusts its inputs.
    """

    order: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, order: int, coeffs: "list[int] | tuple[int, ...]") -> "CyclotomicInt":
        phi = cyclotomic_poly(order)
        return cls(order, _reduce(list(coeffs), phi))

    def __mul__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("operands live in different cyclotomic rings")
        a, b = self.coeffs, other.coeffs
        raw = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    raw[i + j] += ai * bj
        return CyclotomicInt(self.order, _reduce(raw, cyclotomic_poly(self.order)))

    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("element is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def evaluate_mod(self, point: int, modulus: int) -> int:
        """Value of the representing polynomial at point, modulo modulus."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * point + c) % modulus
        return acc


def cyc_mul(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    """Product in Z[x]/Phi_order(x); orders must match."""
    return a * b


@lru_cache(maxsize=None)
def _dlog(p: int) -> tuple[int, ...]:
    """Discrete logs to the least primitive root: entry a - 1 is ind_g(a)."""
    g = smallest_primitive_root(p)
    table = [0] * (p - 1)
    value = 1
    for e in range(p - 1):
        table[value - 1] = e
        value = value * g % p
    return tuple(table)


def discrete_log_table(p: int) -> dict[int, int]:
    """Map a -> ind_g(a) for 1 <= a <= p - 1, g the least primitive root mod p.

    >>> discrete_log_table(5)
    {1: 0, 2: 1, 3: 3, 4: 2}
    """
    if not is_prime(p) or p < 3:
        raise ValueError(f"{p} is not an odd prime")
    table = _dlog(p)
    return {a: table[a - 1] for a in range(1, p)}


def gen_euler_e0(p: int, k: int) -> CyclotomicInt:
    """Generalised Euler value E0(k) in Z[x]/Phi_{p-1}(x) for odd 1 <= k <= p - 2."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"{p} is not an odd prime")
    if k % 2 == 0 or not 1 <= k <= p - 2:
        raise ValueError("character power must be odd and within 1..p-2")
    m = p - 1
    table = _dlog(p)
    raw = [0] * m
    for a in range(1, p):
        raw[k * table[a - 1] % m] += 1 if a % 2 == 0 else -1
    return CyclotomicInt.from_coeffs(m, raw)


@dataclass(frozen=True)
class ClassNumberReport:
    """Exact product data for one prime.

    product_value is the rational integer prod_{k odd} E0(k); h_minus is
    the signed relative refined class number after removing 2^(p-2).
    divisible_by_p and e_irregular are computed by independent routes and
    must agree.
    """

    p: int
    product_value: int
    h_minus: int
    divisible_by_p: bool
    e_irregular: bool


def relative_refined_class_number(p: int, ceiling: int = CLASSNUM_CEILING) -> ClassNumberReport:
    """Exact relative refined class number at p, for odd primes p <= ceiling.

    Raises SelfCheckError if the character product fails to collapse to a
    rational integer or misses the guaranteed 2^(p-2) factor; both are
    theorems, so either failure means the implementation is wrong.
    """
    if not is_prime(p) or p < 3 or p % 2 == 0:
        raise ValueError(f"{p} is not an odd prime")
    if p > ceiling:
        raise ValueError(f"exact class number computation is capped at p <= {ceiling}")
    m = p - 1
    product = CyclotomicInt.from_coeffs(m, (1,))
    for k in range(1, p - 1, 2):
        product = product * gen_euler_e0(p, k)
    if not product.is_constant():
        raise SelfCheckError(f"odd character product at p = {p} is not a rational integer")
    value = product.constant_value()
    two_power = 1 << (p - 2)
    if value % two_power:
        raise SelfCheckError(f"character product at p = {p} is not divisible by 2^(p-2)")
    sign = -1 if ((p - 1) // 2) % 2 else 1
    h_minus = sign * (value // two_power)
    return ClassNumberReport(
        p=p,
        product_value=value,
        h_minus=h_minus,
        divisible_by_p=value % p == 0,
        e_irregular=bool(e_irregular_indices(p)),
    )


def verify_character_congruence(p: int, n: int) -> bool:
    """Check E0(n) = E_n(0) mod (p, x - g) for odd n, g the least primitive root.

    Reduces the cyclotomic value at x = g modulo p and compares with the
    exact rational E_n(0) reduced modulo p.  The substitution is legitimate
    because g is a root of Phi_{p-1} modulo p, which is asserted first.
    """
    if not is_prime(p) or p < 3 or p % 2 == 0:
        raise ValueError(f"{p} is not an odd prime")
    if n % 2 == 0 or not 1 <= n <= p - 2:
        raise ValueError("index must be odd and within 1..p-2")
    g = smallest_primitive_root(p)
    phi = cyclotomic_poly(p - 1)
    at_g = 0
    for c in reversed(phi):
        at_g = (at_g * g + c) % p
    if at_g != 0:
        raise SelfCheckError(f"primitive root {g} is not a root of Phi_{p - 1} mod {p}")
    lhs = gen_euler_e0(p, n).evaluate_mod(g, p)
    rhs = rational_mod(euler_zero(n), p)
    return lhs == rhs
