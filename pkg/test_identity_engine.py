"""
Tests for the exact identity engine.
"""
from fractions import Fraction

import pytest

from supercat.models.scan import ScanConfig, Suite
from supercat.suites.identity_engine import (
    LHS_B1,
    LHS_C1,
    REC_B1,
    REC_C1,
    RHS_B1,
    RHS_C1,
    IdentitySuite,
    RecurrenceSuite,
    check_identity,
    check_inner_sums,
    check_recurrence,
    check_uniqueness,
    forward_substitute,
    inner_sum_c6,
    lhs_b1,
    lhs_c1,
    rhs_b1,
    rhs_c1,
)


class TestPlainIdentity:
    def test_small_values(self):
        assert lhs_b1(0) == rhs_b1(0) == 1
        assert lhs_b1(1) == rhs_b1(1) == 1
        assert lhs_b1(2) == rhs_b1(2) == Fraction(19, 3)
        assert lhs_b1(3) == rhs_b1(3) == Fraction(-43, 5)

    def test_window(self):
        records = check_identity(LHS_B1, RHS_B1, 25, "identity_b1", "double-sum-identity")
        assert [r.index for r in records] == list(range(26))
        assert all(r.passed for r in records)

    def test_failing_pair_has_witness(self):
        records = check_identity(LHS_B1, LHS_C1, 2)
        assert records[0].passed is False  # 1 vs 0 at n = 0
        assert records[0].witness["index"] == 0
        assert records[0].witness["lhs"] == "1"


class TestWeightedIdentity:
    def test_small_values(self):
        assert lhs_c1(0) == rhs_c1(0) == 0
        assert lhs_c1(1) == rhs_c1(1) == 8

    def test_window(self):
        records = check_identity(LHS_C1, RHS_C1, 25)
        assert all(r.passed for r in records)


class TestRecurrences:
    def test_order(self):
        assert REC_B1.order == 3
        assert REC_C1.order == 3

    def test_plain_recurrence_predicts_next_term(self):
        values = forward_substitute(REC_B1, [lhs_b1(k) for k in range(3)], 3)
        assert values[3] == Fraction(-43, 5)

    @pytest.mark.parametrize("rec,side", [
        (REC_B1, LHS_B1), (REC_B1, RHS_B1), (REC_C1, LHS_C1), (REC_C1, RHS_C1),
    ])
    def test_annihilates_both_sides(self, rec, side):
        records = check_recurrence(side, rec, 20)
        assert len(records) == 21
        assert all(r.passed for r in records)

    def test_wrong_sequence_is_not_annihilated(self):
        records = check_recurrence(LHS_C1, REC_B1, 5)
        assert not all(r.passed for r in records)

    def test_uniqueness(self):
        assert all(r.passed for r in check_uniqueness(LHS_B1, REC_B1, 20))
        assert all(r.passed for r in check_uniqueness(LHS_C1, REC_C1, 20))


class TestInnerSum:
    def test_values(self):
        assert inner_sum_c6(1, 1) == (3, 3)
        assert inner_sum_c6(2, 2) == (Fraction(19, 4), Fraction(19, 4))

    def test_bounds(self):
        with pytest.raises(ValueError):
            inner_sum_c6(2, 0)
        with pytest.raises(ValueError):
            inner_sum_c6(2, 3)

    def test_triangle(self):
        records = check_inner_sums(12)
        assert len(records) == 12 * 13 // 2
        assert all(r.passed for r in records)
        assert {r.equation for r in records} == {"inner-sum-closed-form"}


class TestSuites:
    def test_identity_b1_suite(self):
        config = ScanConfig(identity_n_max=6)
        suite = IdentitySuite(Suite.IDENTITY_B1)
        assert suite.tasks(config) == [6]
        records = suite.run(6, config)
        assert len(records) == 7
        assert all(r.suite == "identity_b1" and r.passed for r in records)

    def test_identity_c1_suite_includes_inner_sums(self):
        config = ScanConfig(identity_n_max=5, inner_sum_n_max=4)
        records = IdentitySuite(Suite.IDENTITY_C1).run(5, config)
        equations = [r.equation for r in records]
        assert equations.count("weighted-double-sum-identity") == 6
        assert equations.count("inner-sum-closed-form") == 10
        assert all(r.passed for r in records)

    def test_recurrence_suite(self):
        config = ScanConfig(identity_n_max=6)
        records = RecurrenceSuite().run(6, config)
        assert len(records) == 6 * 7
        assert all(r.passed for r in records)
