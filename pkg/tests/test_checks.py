"""Every named check suite at its full degree cap (the module invariants)."""

from __future__ import annotations

import pytest

from contragenic.checks import SUITES, run_suite

SUITE_CAPS = {
    "legendre": 12,
    "theorem21": 10,
    "norms": 10,
    "gram": 8,
    "dims": 6,
    "bergman": 6,
    "surface": 6,
    "star": 8,
}


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_all_pass(suite):
    results = run_suite(suite, SUITE_CAPS[suite])
    failures = [r.line() for r in results if not r.passed]
    assert not failures, failures


def test_unknown_suite_rejected():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("bogus", 3)


def test_degree_floor_rejected():
    with pytest.raises(ValueError):
        run_suite("dims", 0)


def test_failure_lines_carry_discrepancies():
    # a synthetic failing result renders with its detail
    from contragenic.checks import CheckResult

    line = CheckResult("demo", False, "difference 1/2").line()
    assert line == "FAIL  demo  (difference 1/2)"
    assert CheckResult("demo", True).line() == "PASS  demo"
