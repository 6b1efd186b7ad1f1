"""Exact Bernoulli / Euler arithmetic against hand-checked and series-derived values."""

from __future__ import annotations

import doctest
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import eirreg.exact
from eirreg import (
    NumeratorSplit,
    SelfCheckError,
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


def test_module_doctests():
    failed, _ = doctest.testmod(eirreg.exact)
    assert failed == 0


@pytest.mark.parametrize(
    "n, expected",
    [
        (0, Fraction(1)),
        (1, Fraction(-1, 2)),
        (2, Fraction(1, 6)),
        (3, Fraction(0)),
        (4, Fraction(-1, 30)),
        (10, Fraction(5, 66)),
        (12, Fraction(-691, 2730)),
        (14, Fraction(7, 6)),
        (30, Fraction(8615841276005, 14322)),
    ],
)
def test_bernoulli_known_values(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_vanishes_at_odd_indices():
    assert all(bernoulli(n) == 0 for n in range(3, 61, 2))


def test_bernoulli_sign_alternates():
    # sign of the numerator of B_2k is (-1)^(k-1)
    for k in range(1, 31):
        assert (bernoulli(2 * k) > 0) == (k % 2 == 1)


def test_bernoulli_rejects_negative_index():
    with pytest.raises(ValueError):
        bernoulli(-1)


@pytest.mark.parametrize(
    "n, expected",
    [(0, 1), (1, 0), (2, -1), (4, 5), (6, -61), (8, 1385), (10, -50521), (12, 2702765)],
)
def test_euler_number_known_values(n, expected):
    assert euler_number(n) == expected


def test_euler_number_vanishes_at_odd_indices():
    assert all(euler_number(n) == 0 for n in range(1, 61, 2))


@pytest.mark.parametrize(
    "n, expected",
    [
        (0, Fraction(1)),
        (1, Fraction(-1, 2)),
        (2, Fraction(0)),
        (3, Fraction(1, 4)),
        (5, Fraction(-1, 2)),
        (7, Fraction(17, 8)),
        (9, Fraction(-31, 2)),
        (11, Fraction(691, 4)),
        (13, Fraction(-5461, 2)),
    ],
)
def test_euler_zero_known_values(n, expected):
    assert euler_zero(n) == expected


def test_euler_zero_vanishes_at_positive_even_indices():
    assert all(euler_zero(n) == 0 for n in range(2, 61, 2))


def test_euler_zero_routes_agree():
    for n in range(0, 120):
        assert euler_zero(n) == euler_zero_oracle(n)


def test_euler_zero_matches_series_ground_truth():
    series = euler_generating_series(0, 60)
    for n in range(61):
        assert euler_zero(n) == series[n]


def test_two_power_scaling_is_integral():
    # 2^n E_n(0) is always an integer
    for n in range(0, 80):
        assert (2**n * euler_zero(n)).denominator == 1


def test_euler_numbers_are_halfway_values():
    series = euler_generating_series(Fraction(1, 2), 40)
    for n in range(41):
        assert euler_number(n) == 2**n * series[n]
        assert euler_number(n) == 2**n * euler_poly_eval(n, Fraction(1, 2))


@pytest.mark.parametrize(
    "n, x, expected",
    [
        (0, Fraction(5, 3), Fraction(1)),
        (1, 0, Fraction(-1, 2)),
        (1, Fraction(1, 2), Fraction(0)),
        (2, Fraction(1, 2), Fraction(-1, 4)),
        (5, Fraction(1, 3), Fraction(-121, 486)),
    ],
)
def test_euler_poly_eval_known_values(n, x, expected):
    assert euler_poly_eval(n, x) == expected


def test_euler_poly_reflection():
    # E_n(1 - x) = (-1)^n E_n(x)
    x = Fraction(2, 7)
    for n in range(0, 25):
        assert euler_poly_eval(n, 1 - x) == (-1) ** n * euler_poly_eval(n, x)


@settings(max_examples=40)
@given(
    n=st.integers(min_value=0, max_value=22),
    num=st.integers(min_value=-9, max_value=9),
    den=st.integers(min_value=1, max_value=9),
)
def test_euler_poly_eval_matches_series(n, num, den):
    x = Fraction(num, den)
    assert euler_poly_eval(n, x) == euler_generating_series(x, n)[n]


@pytest.mark.parametrize("k, expected", [(1, 6), (2, 30), (6, 2730), (7, 6), (15, 14322)])
def test_bernoulli_denominator_known_values(k, expected):
    assert bernoulli_denominator(k) == expected


def test_bernoulli_denominator_agrees_with_exact_table():
    for k in range(1, 31):
        assert bernoulli_denominator(k) == bernoulli(2 * k).denominator


def test_bernoulli_denominator_rejects_bad_index():
    with pytest.raises(ValueError):
        bernoulli_denominator(0)


@pytest.mark.parametrize(
    "k, k1, k2",
    [(1, 1, 1), (2, 1, 2), (6, 1, 6), (7, 7, 1), (12, 1, 12), (25, 25, 1), (49, 49, 1)],
)
def test_split_k_known_values(k, k1, k2):
    assert split_k(k) == NumeratorSplit(k=k, k1=k1, k2=k2)


def test_split_k_structure():
    from math import gcd

    for k in range(1, 41):
        s = split_k(k)
        assert s.k1 * s.k2 == k
        assert gcd(s.k1, s.k2) == 1
        assert bernoulli(2 * k).numerator % s.k1 == 0


@pytest.mark.parametrize("n, expected", [(1, 1), (3, 2), (5, 1), (7, 3), (9, 1), (15, 4), (31, 5)])
def test_euler_zero_den_valuation_known_values(n, expected):
    assert euler_zero_den_valuation(n) == expected


def test_euler_zero_den_valuation_never_self_checks_in_range():
    for n in range(1, 120, 2):
        assert euler_zero(n).denominator == 2 ** euler_zero_den_valuation(n)


@pytest.mark.parametrize("n", [0, 2, -3])
def test_euler_zero_den_valuation_rejects_non_odd(n):
    with pytest.raises(ValueError):
        euler_zero_den_valuation(n)


def test_divides_numerator():
    assert divides_numerator(691, bernoulli(12))
    assert divides_numerator(37, euler_zero(31))
    assert not divides_numerator(5, Fraction(1, 5))


def test_rational_mod():
    assert rational_mod(Fraction(1, 4), 5) == 4
    assert rational_mod(Fraction(-1, 2), 7) == 3
    assert rational_mod(3, 7) == 3
    with pytest.raises(ValueError):
        rational_mod(Fraction(1, 5), 5)


def test_self_check_error_is_runtime_error():
    assert issubclass(SelfCheckError, RuntimeError)
