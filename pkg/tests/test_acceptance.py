"""Acceptance gate: every numbered criterion runs through the verification
suite at full range (n up to 7) with exact arithmetic; each test below
asserts one criterion and pytest's verbose output gives the per-criterion
pass/fail line."""

import time

import pytest

from extalg.verify import ACCEPTANCE, run_checks

WALL_BUDGET = 330.0  # sum of the stated per-criterion runtime allowances


@pytest.fixture(scope="module")
def suite():
    t0 = time.perf_counter()
    results = {r.anchor: r for r in run_checks(upto_n=7)}
    elapsed = time.perf_counter() - t0
    return results, elapsed


def _assert_criterion(results, number):
    failures = []
    for anchor in ACCEPTANCE[number]:
        r = results.get(anchor)
        if r is None:
            failures.append("%s: missing from the suite" % anchor)
        elif r.status != "pass":
            failures.append("%s: %s (%s)" % (anchor, r.status, r.detail))
    assert not failures, "criterion %d: %s" % (number, "; ".join(failures))
    for anchor in ACCEPTANCE[number]:
        print("criterion %d / %s: %s" % (number, anchor, results[anchor].detail))


def test_criterion_1_dimension_table_and_search(suite):
    results, _ = suite
    _assert_criterion(results, 1)


def test_criterion_2_even_canonical_maximality(suite):
    results, _ = suite
    _assert_criterion(results, 2)


def test_criterion_3_split_chain_properties(suite):
    results, _ = suite
    _assert_criterion(results, 3)


def test_criterion_4_worked_examples(suite):
    results, _ = suite
    _assert_criterion(results, 4)


def test_criterion_5_initial_term_condition(suite):
    results, _ = suite
    _assert_criterion(results, 5)


def test_criterion_6_family_maxima(suite):
    results, _ = suite
    _assert_criterion(results, 6)


def test_criterion_7_radical_invariant(suite):
    results, _ = suite
    _assert_criterion(results, 7)


def test_criterion_8_monomial_bridge(suite):
    results, _ = suite
    _assert_criterion(results, 8)


def test_suite_covers_enough_anchors(suite):
    results, _ = suite
    assert len(results) >= 25
    assert not any(r.status == "fail" for r in results.values())
    assert not any(r.status == "skip" for r in results.values())


def test_suite_runtime_within_budget(suite):
    _, elapsed = suite
    assert elapsed < WALL_BUDGET
