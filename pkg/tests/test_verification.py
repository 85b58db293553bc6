import pytest

from combinatorics.errors import PreconditionError
from config import get_preset_examples, get_settings
from theorems.core.executor import GridExecutor
from theorems.verification import (
    CoreIdentityCase,
    a31b_consistency_grid,
    a31b_weight_grid,
    a31b_weight_multiset,
    core_identity_grid,
    enumerate_a31b_families,
    power_hook_grid,
    rank_two_equivalence_grid,
    special_oracle_grid,
    verify_a31b_consistency,
    verify_core_identity,
    verify_examples,
)


def terms(records):
    return {tuple(t.partition): t.coeff for t in records}


def test_core_identity_case_one():
    verdict = verify_core_identity(2, 3, 2)
    assert verdict.verdict == CoreIdentityCase.CASE_ONE
    assert terms(verdict.core_component) == {(4, 1): 1}
    assert verdict.adapted_matches
    assert verdict.matched


def test_core_identity_case_two():
    verdict = verify_core_identity(2, 2, 1)
    assert verdict.verdict == CoreIdentityCase.CASE_TWO
    assert terms(verdict.core_component) == {(2, 1): 1}


def test_core_identity_zero():
    verdict = verify_core_identity(2, 2, 2)
    assert verdict.verdict == CoreIdentityCase.ZERO
    assert verdict.core_component == []
    assert verdict.render().startswith("m=2, a=2, b=2: zero: 0")


def test_core_identity_preconditions():
    with pytest.raises(PreconditionError) as excinfo:
        verify_core_identity(1, 0, -1)
    assert len(excinfo.value.violations) == 3


def test_core_identity_small_grid():
    report = core_identity_grid(max_m=3, a_span=5, b_span=4)
    assert report.ok, report.render()
    assert report.total == 2 * 6 * 6


def test_a31b_consistency_smallest_case():
    verdict = verify_a31b_consistency(6, 3)
    assert verdict.consistent
    expected = {(6, 3, 2): 1, (8, 3): 2}
    for side in (verdict.theorem_side, verdict.family_side, verdict.weight_side):
        assert {tuple(s.young): s.mult for s in side} == expected


def test_a31b_consistency_example():
    verdict = verify_a31b_consistency(14, 9)
    assert verdict.consistent, verdict.render()
    assert enumerate_a31b_families(14, 9) == a31b_weight_multiset(14, 9)


def test_a31b_consistency_preconditions():
    with pytest.raises(PreconditionError):
        verify_a31b_consistency(8, 3)


def test_a31b_consistency_small_grid():
    report = a31b_consistency_grid(max_a=22, max_b=15)
    assert report.ok, report.render()
    assert report.total == 5 * 7


def test_a31b_weight_small_grid():
    report = a31b_weight_grid(max_a=14, max_b=9)
    assert report.ok, report.render()
    assert report.total == 4 * 4


def test_rank_two_small_grid():
    report = rank_two_equivalence_grid(max_c=16)
    assert report.ok, report.render()
    assert report.total == 17 * len(get_settings().grids.rank_two_params)


def test_special_oracle_small_grid():
    report = special_oracle_grid(max_r=60, primes=[2, 3, 5, 7])
    assert report.ok, report.render()


def test_power_hook_grid():
    report = power_hook_grid(max_k=7)
    assert report.ok, report.render()
    assert report.passed == 7


def test_examples_replay():
    report = verify_examples()
    assert report.ok, report.render()
    assert report.total == len(get_preset_examples())


def test_threaded_grid_matches_serial():
    serial = special_oracle_grid(max_r=30, primes=[3])
    threaded = special_oracle_grid(max_r=30, primes=[3], workers=4)
    assert (threaded.total, threaded.passed) == (serial.total, serial.passed)


def test_executor_collects_failures_and_errors():
    def check(n):
        if n == 1:
            return "one disagrees"
        if n == 2:
            raise PreconditionError("two is out of range")
        return None

    report = GridExecutor(max_workers=1).run("toy", check, [{"n": n} for n in range(4)])
    assert report.total == 4
    assert report.passed == 2
    assert [f.parameters for f in report.failures] == [{"n": 1}]
    assert report.errors[0].message.startswith("PreconditionError")
    assert not report.ok
    assert "MISMATCH" in report.render()


def test_core_identity_full_grid():
    # 2 ≤ m ≤ 5, m ≤ a ≤ m+12, m-1 ≤ b ≤ m+11
    report = core_identity_grid()
    assert report.ok, report.render()
    assert report.total == 4 * 13 * 13


def test_a31b_consistency_full_grid():
    report = a31b_consistency_grid()
    assert report.ok, report.render()
    assert report.total == 171


def test_a31b_weight_full_grid():
    report = a31b_weight_grid()
    assert report.ok, report.render()
    assert report.total == 112


def test_rank_two_full_grid():
    report = rank_two_equivalence_grid()
    assert report.ok, report.render()
    assert report.total == 61 * len(get_settings().grids.rank_two_params)


def test_special_oracle_full_grid():
    report = special_oracle_grid()
    assert report.ok, report.render()
    assert report.total == 501 * len(get_settings().grids.special_primes)


def test_power_hook_full_grid():
    report = power_hook_grid()
    assert report.ok, report.render()
    assert report.passed == 10
