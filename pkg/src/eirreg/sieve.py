"""Modular sieves for Bernoulli-irregular and Euler-polynomial-irregular indices.

A prime p is *irregular* when it divides the numerator of some Bernoulli
number B_2k with 2k <= p - 3, and *E-irregular* when it divides the
numerator of some Euler polynomial value E_n(0) with n odd, n <= p - 2.
Both properties reduce to residue computations that run entirely in Z/p:

* the Bernoulli recursion stays valid mod p up to index p - 3 because those
  denominators are coprime to p;
* E_n(0) is congruent mod p to the alternating power sum
  sum_{a=1}^{p-1} (-1)^a a^n, which needs no rational arithmetic at all.

The kernels are vectorised with numpy int64.  Entries stay below p, so dot
products are bounded by p^3; the guard in :func:`_validate_sieve_prime`
keeps p small enough that this never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SelfCheckError
from .primes import is_prime

__all__ = [
    "bernoulli_mod_table",
    "alt_power_sum",
    "alt_power_sum_table",
    "irregular_indices",
    "e_irregular_indices",
    "is_wieferich",
    "PrimeClassification",
    "classify",
]

# int64 dot products of residue vectors are bounded by p^3 < 2^60 here.
_SIEVE_CEILING = 1 << 20


def _validate_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def _validate_sieve_prime(p: int) -> None:
    _validate_odd_prime(p)
    if p > _SIEVE_CEILING:
        raise ValueError(f"sieve kernels support p <= {_SIEVE_CEILING}")


def bernoulli_mod_table(p: int) -> dict[int, int]:
    """Residues of B_2, B_4, ..., B_{p-3} modulo p.

    Runs the defining recursion in Z/p with an incrementally updated
    binomial row.  Odd indices are skipped in the result (their residues
    are zero past B_1) but participate in the recursion.
    """
    _validate_sieve_prime(p)
    top = p - 3
    if top < 2:
        return {}
    values = np.zeros(top + 1, dtype=np.int64)
    values[0] = 1
    values[1] = (p - 1) * pow(2, p - 2, p) % p  # -1/2 mod p
    row = np.zeros(top + 3, dtype=np.int64)  # binomial row C(n, .)
    row[0] = 1
    row[1] = 2
    row[2] = 1
    for n in range(2, top + 1):
        # advance C(n, .) to C(n+1, .): the slice copy keeps the update exact
        row[1 : n + 1] = (row[1 : n + 1] + row[:n]) % p
        row[n + 1] = 1
        if (n + 1) % p == 0:
            raise SelfCheckError(f"recursion asked to invert {n + 1} modulo {p}")
        s = int(row[:n] @ values[:n] % p)
        values[n] = (p - s) * pow(n + 1, p - 2, p) % p
    return {n: int(values[n]) for n in range(2, top + 1, 2)}


def alt_power_sum(p: int, n: int) -> int:
    """The alternating power sum sum_{a=1}^{p-1} (-1)^a a^n modulo p.

    Congruent to E_n(0) mod p for odd n; this is the whole basis of the
    modular route to E-irregularity.
    """
    _validate_odd_prime(p)
    if n < 0:
        raise ValueError("exponent must be non-negative")
    total = 0
    for a in range(1, p):
        t = pow(a, n, p)
        total += t if a % 2 == 0 else -t
    return total % p


def alt_power_sum_table(p: int, max_index: int | None = None) -> dict[int, int]:
    """Alternating power sums for every odd exponent 1 <= n <= max_index, mod p.

    max_index defaults to p - 2, the full E-irregularity window.  Larger
    values are allowed so congruences between shifted exponents can be
    checked from one sweep.
    """
    _validate_sieve_prime(p)
    top = p - 2 if max_index is None else max_index
    if top < 1:
        raise ValueError("need at least one odd exponent")
    a = np.arange(1, p, dtype=np.int64)
    signs = np.where(a % 2 == 0, 1, -1).astype(np.int64)
    square = a * a % p
    power = a.copy()  # a^n for the current odd n
    out: dict[int, int] = {}
    for n in range(1, top + 1, 2):
        out[n] = int(signs @ power % p)
        power = power * square % p
    return out


def irregular_indices(p: int) -> frozenset[int]:
    """Even 2k <= p - 3 with p dividing the numerator of B_2k."""
    return frozenset(n for n, residue in bernoulli_mod_table(p).items() if residue == 0)


def e_irregular_indices(p: int) -> frozenset[int]:
    """Odd n <= p - 2 with p dividing the numerator of E_n(0)."""
    return frozenset(n for n, residue in alt_power_sum_table(p).items() if residue == 0)


def is_wieferich(p: int) -> bool:
    """True when 2^(p-1) = 1 modulo p^2."""
    _validate_odd_prime(p)
    return pow(2, p - 1, p * p) == 1


@dataclass(frozen=True)
class PrimeClassification:
    """Joint irregularity data for one odd prime."""

    p: int
    irregular_indices: frozenset[int]
    e_irregular_indices: frozenset[int]
    is_irregular: bool
    is_e_irregular: bool
    wieferich: bool


def classify(p: int) -> PrimeClassification:
    """Classify an odd prime by both notions of irregularity.

    Two unconditional facts are re-checked on every call and raise
    SelfCheckError when violated:

    * each irregular index 2k has the E-irregular companion 2k - 1, so
      irregular primes form a subset of E-irregular primes;
    * the boundary index p - 2 is E-irregular exactly for Wieferich primes.
    """
    _validate_sieve_prime(p)
    irregular = irregular_indices(p)
    e_irregular = e_irregular_indices(p)
    wieferich = is_wieferich(p)
    for index in irregular:
        if index - 1 not in e_irregular:
            raise SelfCheckError(
                f"irregular index {index} of p = {p} lacks the companion index {index - 1}"
            )
    if ((p - 2) in e_irregular) != wieferich:
        raise SelfCheckError(
            f"boundary index p - 2 and the Fermat quotient test disagree at p = {p}"
        )
    return PrimeClassification(
        p=p,
        irregular_indices=irregular,
        e_irregular_indices=e_irregular,
        is_irregular=bool(irregular),
        is_e_irregular=bool(e_irregular),
        wieferich=wieferich,
    )
