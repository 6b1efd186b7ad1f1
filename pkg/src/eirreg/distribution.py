"""Distribution of E-irregular primes along the multiplicative order of 2.

For a prime p >= 5 let r = ord_p(2) and let m be r or 2r, whichever is
even.  Whenever m < p - 1, the odd index n = m - 1 satisfies
E_n(0) = 0 mod p, so p is certifiably E-irregular with witness n.  The
construction fails only for two order classes:

* the *half-order class*: p = 3 mod 4 with r = (p - 1) / 2 (then m = p - 1);
* the *full-order class*: 2 a primitive root mod p (r = p - 1).

``scan`` tallies a census of both classes and of the certified remainder up
to a bound, together with residue splits of the certified primes and an
Artin-constant reference line.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SelfCheckError
from .primes import is_prime, multiplicative_order, sieve_primes

__all__ = [
    "order_of_two",
    "OrderProfile",
    "profile",
    "profile_many",
    "ArtinEstimate",
    "artin_constant",
    "ScanReport",
    "aggregate_report",
    "scan",
]

_ARTIN_REFERENCE_BOUND = 10**6


def order_of_two(p: int) -> int:
    """Multiplicative order of 2 modulo the odd prime p."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return multiplicative_order(2, p)


@dataclass(frozen=True)
class OrderProfile:
    """Order data for one prime p >= 5.

    witness is an odd index n <= p - 4 with p | numerator(E_n(0)), present
    exactly when p sits in neither order class.
    """

    p: int
    r: int
    m: int
    in_p1: bool
    in_p2: bool
    witness: int | None


def profile(p: int) -> OrderProfile:
    """Classify p by the order of 2 and derive the E-irregularity witness.

    p = 3 is excluded: it has no odd index in range at all.
    """
    if p < 5:
        raise ValueError("profiles are defined for primes p >= 5")
    r = order_of_two(p)
    m = r if r % 2 == 0 else 2 * r
    in_p1 = p % 4 == 3 and r == (p - 1) // 2
    in_p2 = r == p - 1
    witness: int | None = None
    if not (in_p1 or in_p2):
        # here m is even and m < p - 1, so n = m - 1 is odd and <= p - 4
        if m % 2 != 0 or m >= p - 1:
            raise SelfCheckError(f"witness construction broke at p = {p}: r = {r}, m = {m}")
        witness = m - 1
    return OrderProfile(p=p, r=r, m=m, in_p1=in_p1, in_p2=in_p2, witness=witness)


def _profile_chunk(ps: Sequence[int]) -> list[OrderProfile]:
    return [profile(p) for p in ps]


def profile_many(ps: Sequence[int], jobs: int = 1) -> list[OrderProfile]:
    """Profiles for many primes, optionally fanned out over processes.

    Results are returned in input order regardless of jobs, so downstream
    output is deterministic.
    """
    ps = [int(p) for p in ps]
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if jobs == 1 or len(ps) < 64:
        return _profile_chunk(ps)
    chunk = max(64, -(-len(ps) // (jobs * 8)))
    chunks = [ps[i : i + chunk] for i in range(0, len(ps), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        out: list[OrderProfile] = []
        for part in pool.map(_profile_chunk, chunks):
            out.extend(part)
    return out


@dataclass(frozen=True)
class ArtinEstimate:
    """Truncated Artin constant prod_{p <= prime_bound} (1 - 1/(p(p-1)))."""

    value: Decimal
    prime_bound: int
    tail_bound: Decimal


@lru_cache(maxsize=None)
def artin_constant(prime_bound: int) -> ArtinEstimate:
    """Artin's constant truncated over primes up to prime_bound.

    Runs at 40 significant digits so rounding never touches the reported
    figures.  The omitted factors lie between exp(-2/prime_bound) and 1, so
    the truncation error is below 2 / prime_bound; that bound is reported
    alongside the value.
    """
    if prime_bound < 2:
        raise ValueError("prime_bound must be at least 2")
    with localcontext() as ctx:
        ctx.prec = 40
        value = Decimal(1)
        for p in sieve_primes(prime_bound).tolist():
            value -= value / (p * (p - 1))
        tail = Decimal(2) / Decimal(prime_bound)
    return ArtinEstimate(value=value, prime_bound=prime_bound, tail_bound=tail)


@dataclass(frozen=True)
class ScanReport:
    """Census of the order classes among primes p <= x.

    certified_count covers primes p >= 5 outside both classes; each such
    prime carries a concrete witness index.  The residue tallies split the
    certified primes mod 4 and mod 6.  bound_value is the reference curve
    (0.875 - A) x / log x with A the Artin constant; it is informational
    and is not compared against the counts by any check.
    """

    x: int
    pi_x: int
    count_p1: int
    count_p2: int
    certified_count: int
    bound_value: float
    class_1mod4: int
    class_3mod4: int
    class_1mod6: int
    class_5mod6: int


def aggregate_report(x: int, pi_x: int, entries: Iterable[object]) -> ScanReport:
    """Fold order profiles (or equivalent cache records) into a ScanReport.

    Accepts any objects carrying p, in_p1, in_p2 and witness attributes.
    The partition pi(x) = #P1 + #P2 + certified + 2 is asserted; the two
    uncounted primes are 2 and 3.
    """
    count_p1 = count_p2 = certified = 0
    c14 = c34 = c16 = c56 = 0
    for entry in entries:
        if entry.in_p1:
            count_p1 += 1
        elif entry.in_p2:
            count_p2 += 1
        else:
            if entry.witness is None:
                raise SelfCheckError(f"prime {entry.p} lacks both a class and a witness")
            certified += 1
            if entry.p % 4 == 1:
                c14 += 1
            else:
                c34 += 1
            if entry.p % 6 == 1:
                c16 += 1
            else:
                c56 += 1
    if certified != pi_x - count_p1 - count_p2 - 2:
        raise SelfCheckError(
            f"census partition broke at x = {x}: "
            f"{certified} != {pi_x} - {count_p1} - {count_p2} - 2"
        )
    artin = artin_constant(_ARTIN_REFERENCE_BOUND).value
    bound = float((Decimal("0.875") - artin) * x) / math.log(x)
    return ScanReport(
        x=x,
        pi_x=pi_x,
        count_p1=count_p1,
        count_p2=count_p2,
        certified_count=certified,
        bound_value=bound,
        class_1mod4=c14,
        class_3mod4=c34,
        class_1mod6=c16,
        class_5mod6=c56,
    )


def scan(x: int, jobs: int = 1) -> ScanReport:
    """Census of order classes over all primes p <= x (x >= 10)."""
    if x < 10:
        raise ValueError("scan needs x >= 10")
    primes = sieve_primes(x).tolist()
    profiles = profile_many([p for p in primes if p >= 5], jobs=jobs)
    return aggregate_report(x=x, pi_x=len(primes), entries=profiles)
