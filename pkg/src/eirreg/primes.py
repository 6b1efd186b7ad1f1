"""Prime utilities: sieving, primality testing, factoring, group orders.

Everything here is deterministic.  The Miller-Rabin test uses a fixed base
set that is known to be exact for all n < 3.3 * 10**24, far beyond any
input this package handles.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

__all__ = [
    "sieve_primes",
    "is_prime",
    "prime_factors",
    "multiplicative_order",
    "smallest_primitive_root",
]

# Exact for n < 3_317_044_064_679_887_385_961_981 (Sorenson-Webster bases).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def sieve_primes(limit: int, segment_size: int = 1 << 18) -> np.ndarray:
    """All primes <= limit as an int64 array, via a segmented Eratosthenes sieve.

    Segments keep the working set cache-resident, so the cost stays close to
    linear in limit for the ranges used here.
    """
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    root = isqrt(limit)
    flags = np.ones(root + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, isqrt(root) + 1):
        if flags[q]:
            flags[q * q :: q] = False
    base = np.flatnonzero(flags).astype(np.int64)
    parts = [base]
    lo = root + 1
    while lo <= limit:
        hi = min(lo + segment_size, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for q in base.tolist():
            start = max(q * q, (lo + q - 1) // q * q)
            if start < hi:
                seg[start - lo :: q] = False
        parts.append(np.flatnonzero(seg).astype(np.int64) + lo)
        lo = hi
    return np.concatenate(parts)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    n = int(n)
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorisation of n >= 1 as {prime: exponent}, by trial division."""
    n = int(n)
    if n < 1:
        raise ValueError("can only factor positive integers")
    out: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    q = 5
    while q * q <= n:
        for step in (q, q + 2):
            while n % step == 0:
                out[step] = out.get(step, 0) + 1
                n //= step
        q += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in the unit group modulo the prime p.

    Starts from the group order p - 1 and strips each prime factor while the
    power still fixes 1, so no exhaustive search is needed.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = a % p
    if a == 0:
        raise ValueError("argument is divisible by the modulus")
    order = p - 1
    for q in prime_factors(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def smallest_primitive_root(p: int) -> int:
    """Least positive generator of the unit group modulo the odd prime p."""
    if p == 2:
        return 1
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    factors = tuple(prime_factors(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")
