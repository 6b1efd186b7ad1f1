"""Order-of-2 census: profiles, certificates, Artin constant, scan reports."""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

import pytest

from eirreg import (
    artin_constant,
    e_irregular_indices,
    order_of_two,
    profile,
    profile_many,
    scan,
    sieve_primes,
)


@pytest.mark.parametrize("p, r", [(5, 4), (7, 3), (17, 8), (23, 11), (31, 5), (1093, 364)])
def test_order_of_two(p, r):
    assert order_of_two(p) == r


def test_order_of_two_rejects_bad_input():
    with pytest.raises(ValueError):
        order_of_two(9)
    with pytest.raises(ValueError):
        order_of_two(2)


def test_profile_certified_prime():
    prof = profile(17)
    assert (prof.r, prof.m) == (8, 8)
    assert not prof.in_p1 and not prof.in_p2
    assert prof.witness == 7


def test_profile_half_order_class():
    prof = profile(7)
    assert prof.in_p1 and not prof.in_p2 and prof.witness is None
    prof = profile(23)
    assert prof.in_p1 and prof.witness is None
    # membership forces p = 7 mod 8 but not 7 mod 24: 23 itself is 23 mod 24
    assert prof.p % 8 == 7 and prof.p % 24 == 23


def test_profile_full_order_class():
    for p in (5, 11, 13, 19, 29):
        prof = profile(p)
        assert prof.in_p2 and prof.witness is None


def test_profile_rejects_small_primes():
    with pytest.raises(ValueError):
        profile(3)


def test_profile_invariants_to_500():
    for p in [int(q) for q in sieve_primes(500) if q >= 5]:
        prof = profile(p)
        assert not (prof.in_p1 and prof.in_p2)
        assert (prof.witness is None) == (prof.in_p1 or prof.in_p2)
        if prof.witness is not None:
            assert prof.witness % 2 == 1
            assert 1 <= prof.witness <= p - 4
            assert prof.witness == prof.m - 1
        if prof.in_p1:
            assert p % 8 == 7


def test_witnesses_are_sound_to_500():
    # every certificate points at a genuinely E-irregular index
    for p in [int(q) for q in sieve_primes(500) if q >= 5]:
        prof = profile(p)
        if prof.witness is not None:
            assert prof.witness in e_irregular_indices(p)


def test_profile_many_matches_map():
    ps = [int(q) for q in sieve_primes(300) if q >= 5]
    assert profile_many(ps) == [profile(p) for p in ps]


def test_artin_constant_anchors():
    assert artin_constant(2).value == Decimal("0.5")
    est = artin_constant(3)
    assert abs(Fraction(str(est.value)) - Fraction(5, 12)) < Fraction(1, 10**30)


def test_artin_constant_tail_and_monotonicity():
    rough = artin_constant(100)
    fine = artin_constant(10**4)
    assert fine.value < rough.value  # every factor is below 1
    assert fine.tail_bound < rough.tail_bound
    assert rough.tail_bound == Decimal(2) / 100


def test_artin_constant_reference_value():
    est = artin_constant(10**6)
    assert str(est.value).startswith("0.373955")


def test_artin_constant_rejects_bad_bound():
    with pytest.raises(ValueError):
        artin_constant(1)


def test_scan_tiny_census():
    rep = scan(30)
    assert rep.pi_x == 10
    assert rep.count_p1 == 2  # 7 and 23
    assert rep.count_p2 == 5  # 5, 11, 13, 19, 29
    assert rep.certified_count == 1  # 17
    assert (rep.class_1mod4, rep.class_3mod4) == (1, 0)
    assert (rep.class_1mod6, rep.class_5mod6) == (0, 1)


def test_scan_partition_holds():
    rep = scan(5000)
    assert rep.certified_count == rep.pi_x - rep.count_p1 - rep.count_p2 - 2
    assert rep.class_1mod4 + rep.class_3mod4 == rep.certified_count
    assert rep.class_1mod6 + rep.class_5mod6 == rep.certified_count


def test_scan_monotone_in_x():
    small, large = scan(1000), scan(2000)
    assert small.pi_x <= large.pi_x
    assert small.count_p1 <= large.count_p1
    assert small.count_p2 <= large.count_p2
    assert small.certified_count <= large.certified_count


def test_scan_jobs_do_not_change_results():
    assert scan(2000, jobs=2) == scan(2000, jobs=1)


def test_scan_rejects_tiny_bound():
    with pytest.raises(ValueError):
        scan(5)
