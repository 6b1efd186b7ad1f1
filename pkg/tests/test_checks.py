"""Verification suites run green at small scale and report useful detail."""

from __future__ import annotations

import pytest

from eirreg import run_suite
from eirreg.checks import (
    classnumber_checks,
    congruence_checks,
    distribution_checks,
    sieve_checks,
)


def _assert_all_gated_pass(results):
    failed = [r for r in results if r.passed is False]
    assert not failed, "; ".join(f"{r.name}: {r.detail}" for r in failed)


def test_congruence_suite_small():
    results = congruence_checks(60)
    names = [r.name for r in results]
    assert names == [
        "kummer-congruence",
        "euler-shift-exact",
        "euler-shift-modular",
        "alt-sum-oracle",
        "character-sum-congruence",
        "bernoulli-euler-bridge",
    ]
    _assert_all_gated_pass(results)


def test_classnumber_suite_small():
    results = classnumber_checks(40)
    assert [r.name for r in results] == [
        "classnum-product-structure",
        "classnum-sieve-equivalence",
        "classnum-congruence-form",
        "classnum-anchor-values",
    ]
    _assert_all_gated_pass(results)


def test_sieve_suite_small():
    results = sieve_checks(200)  # 1093 is pulled in regardless
    _assert_all_gated_pass(results)
    boundary = [r for r in results if r.name == "wieferich-boundary"]
    assert "1093" in boundary[0].detail


def test_distribution_suite_small():
    results = distribution_checks(400)
    _assert_all_gated_pass(results)
    info = [r for r in results if r.passed is None]
    # the 24n+7 shape line is informational: both residues occur in reality
    assert len(info) == 1
    assert info[0].name == "half-order-24n7-shape"
    assert "23" in info[0].detail


def test_suite_limits_are_validated():
    with pytest.raises(ValueError):
        congruence_checks(2)
    with pytest.raises(ValueError):
        distribution_checks(5)
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_run_suite_dispatch():
    assert [r.name for r in run_suite("classnumber", 20)] == [
        r.name for r in classnumber_checks(20)
    ]
    results = run_suite("all", 100)
    names = {r.name for r in results}
    assert "kummer-congruence" in names
    assert "irregular-containment" in names
    assert "census-partition" in names
    assert "classnum-sieve-equivalence" in names
    _assert_all_gated_pass(results)
