"""
Tests for the prime-indexed congruence checks.
"""
import pytest
from hypothesis import given, settings, strategies as st

from supercat.exceptions import DenominatorDivisibleByP, PrimeTooSmall
from supercat.models.scan import ScanConfig, Suite
from supercat.services.modular_core import Residue, odd_primes_between
from supercat.suites.congruence_suite import (
    CongruenceCheck,
    CongruenceSuite,
    SelfTestSuite,
    Weight,
    check_conj_1_4,
    check_conj_1_4_recombination,
    check_mt_coefficientwise,
    check_mt_pointwise,
    check_partial_sums,
    check_pointwise_lemmas,
    check_s1_closed_form,
    check_s2_closed_form,
    check_s2_intermediate_forms,
    check_split_decomposition,
    check_sun_tauraso_p2,
    check_theorem_recomposition,
    check_thm_1_1,
    check_thm_1_2,
    exact_double_sum,
    mt_coefficient_pairs,
    split_sums,
    sum_S,
    super_catalan_table,
    weighted_double_sums,
)

PRIMES = odd_primes_between(3, 200)


def assert_all_pass(checks):
    failing = [c for c in checks if not c.passed]
    assert not failing, failing


class TestDoubleSums:
    def test_exact_sums_at_three(self):
        assert exact_double_sum(3, Weight.ONE) == 33
        assert exact_double_sum(3, Weight.I_PLUS_J) == 80
        assert exact_double_sum(3, Weight.AFFINE) == 273

    def test_reduced_sum(self):
        assert sum_S(3) == Residue(0, 3)
        assert sum_S(5).modulus == 5

    def test_weight_factor(self):
        assert Weight.ONE.factor(2, 3) == 1
        assert Weight.I_PLUS_J.factor(2, 3) == 5
        assert Weight.AFFINE.factor(2, 3) == 16

    def test_all_weights_in_one_pass(self):
        assert dict(weighted_double_sums(3)) == {Weight.ONE: 33, Weight.I_PLUS_J: 80, Weight.AFFINE: 273}
        with pytest.raises(TypeError):
            weighted_double_sums(3)[Weight.ONE] = 0

    def test_full_sums_match_ranged_sums(self):
        full = range(11)
        for weight in Weight:
            assert exact_double_sum(11, weight) == exact_double_sum(11, weight, full, full)

    def test_table_built_once_per_prime_across_suites(self):
        primes = odd_primes_between(5, 180)
        assert len(primes) > super_catalan_table.cache_info().maxsize
        super_catalan_table.cache_clear()
        weighted_double_sums.cache_clear()
        for check in (check_thm_1_1, check_thm_1_2, check_conj_1_4):
            for p in primes:
                assert check(p).passed
        assert super_catalan_table.cache_info().misses == len(primes)


class TestMainCongruences:
    @given(st.sampled_from(PRIMES))
    @settings(max_examples=30, deadline=None)
    def test_plain_sum(self, p):
        check = check_thm_1_1(p)
        assert check.passed
        assert check.modulus == p

    @given(st.sampled_from([p for p in PRIMES if p >= 5]))
    @settings(max_examples=30, deadline=None)
    def test_weighted_sum(self, p):
        assert check_thm_1_2(p).passed

    def test_weighted_sum_needs_p_at_least_five(self):
        with pytest.raises(PrimeTooSmall):
            check_thm_1_2(3)

    @given(st.sampled_from(PRIMES))
    @settings(max_examples=30, deadline=None)
    def test_affine_sum(self, p):
        assert check_conj_1_4(p).passed

    def test_affine_sum_at_three(self):
        check = check_conj_1_4(3)
        assert check.lhs == Residue(0, 3)
        assert check.passed

    @pytest.mark.parametrize("p", [5, 7, 11, 13, 31])
    def test_recombination(self, p):
        checks = check_conj_1_4_recombination(p)
        assert [c.equation for c in checks] == ["affine-recombination-exact", "affine-recombination"]
        assert checks[0].modulus is None
        assert_all_pass(checks)

    def test_recombination_needs_p_at_least_five(self):
        with pytest.raises(PrimeTooSmall):
            check_conj_1_4_recombination(3)


class TestQuadrants:
    def test_split_at_three(self):
        split = split_sums(3, Weight.ONE)
        assert split.exact == (7, 10, 10, 6)
        assert split.s1 == Residue(1, 3)
        assert split.s2 == Residue(1, 3)
        assert split_sums(3, Weight.I_PLUS_J).exact[1] == 24

    @pytest.mark.parametrize("p", odd_primes_between(3, 41))
    @pytest.mark.parametrize("weight", list(Weight))
    def test_decomposition(self, p, weight):
        assert_all_pass(check_split_decomposition(p, weight))

    @pytest.mark.parametrize("p", odd_primes_between(5, 61))
    def test_closed_forms(self, p):
        assert_all_pass(check_s1_closed_form(p) + check_s2_closed_form(p))

    def test_weighted_closed_form_undefined_at_three(self):
        with pytest.raises(DenominatorDivisibleByP):
            check_s1_closed_form(3)
        with pytest.raises(DenominatorDivisibleByP):
            check_s2_closed_form(3)

    @pytest.mark.parametrize("p", odd_primes_between(3, 61))
    def test_intermediate_forms(self, p):
        checks = check_s2_intermediate_forms(p)
        assert len(checks) == (2 if p == 3 else 3)
        assert_all_pass(checks)

    def test_weighted_geometric_form_at_five(self):
        geometric = check_s2_intermediate_forms(5)[2]
        assert geometric.rhs == Residue(3, 5)
        assert geometric.lhs == Residue(3, 5)

    @pytest.mark.parametrize("p", odd_primes_between(3, 101))
    def test_recomposition(self, p):
        assert_all_pass(check_theorem_recomposition(p))


class TestLemmas:
    @pytest.mark.parametrize("p", odd_primes_between(3, 41))
    def test_pointwise(self, p):
        assert_all_pass(check_pointwise_lemmas(p))

    def test_quadrant_ratio_instance(self):
        checks = check_pointwise_lemmas(5)
        ratio = next(
            c for c in checks
            if c.equation == "quadrant-ratio" and c.params == {"i": 2, "j": 1}
        )
        assert ratio.lhs == Residue(2, 5)
        assert ratio.passed

    def test_pointwise_families(self):
        equations = {c.equation for c in check_pointwise_lemmas(7)}
        assert equations == {
            "central-binomial-lift",
            "shifted-binomial",
            "quadrant-ratio-vanishes",
            "quadrant-ratio",
            "quadrant-ratio-factorial",
        }

    @pytest.mark.parametrize("p", odd_primes_between(3, 101))
    def test_partial_sums(self, p):
        checks = check_partial_sums(p)
        assert_all_pass(checks)
        has_power_sums = any(c.equation == "catalan-partial-sum" for c in checks)
        assert has_power_sums == (p >= 5)


class TestBackground:
    @pytest.mark.parametrize("p", odd_primes_between(3, 41))
    def test_generating_pointwise(self, p):
        checks = check_mt_pointwise(p, 1)
        assert len(checks) == 2 * p
        assert_all_pass(checks)

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_generating_pointwise_square(self, p):
        assert_all_pass(check_mt_pointwise(p, 2))

    def test_generating_values_at_five(self):
        central, catalan_side = check_mt_pointwise(5)[2:4]
        assert central.params == {"e": 1, "x": 1}
        assert central.lhs == Residue(4, 5)
        assert catalan_side.lhs == Residue(3, 5)

    def test_generating_prime_power_ceiling(self):
        with pytest.raises(ValueError):
            check_mt_pointwise(101, 2)

    def test_coefficientwise(self):
        assert len(mt_coefficient_pairs(7)) == 7
        check = check_mt_coefficientwise(7)
        assert check.asserted and check.passed
        assert check.params["coefficients"] == 7

    def test_coefficientwise_square_is_informational(self):
        check = check_mt_coefficientwise(5, 2)
        assert check.asserted is False
        assert check.params["coefficients"] == 25
        assert check.passed

    @pytest.mark.parametrize("p", odd_primes_between(5, 101))
    def test_mod_p_squared(self, p):
        central, catalan_side = check_sun_tauraso_p2(p)
        assert central.modulus == p * p
        assert central.passed and catalan_side.passed

    def test_mod_p_squared_at_five(self):
        central, catalan_side = check_sun_tauraso_p2(5)
        assert central.lhs == Residue(24, 25)
        assert catalan_side.lhs == Residue(23, 25)

    def test_mod_p_squared_needs_p_at_least_five(self):
        with pytest.raises(PrimeTooSmall):
            check_sun_tauraso_p2(3)


class TestCongruenceCheck:
    def test_exact_check_has_no_modulus(self):
        check = CongruenceCheck("affine-recombination-exact", 5, 10, 10)
        assert check.modulus is None
        record = check.to_record("conj14")
        assert record.passed and record.modulus is None and record.lhs == "10"

    def test_failing_record_carries_witness(self):
        record = CongruenceCheck(
            "double-sum", 7, Residue(1, 7), Residue(2, 7), {"weight": "one"}
        ).to_record("thm11")
        assert record.failed
        assert record.witness == {"index": 7, "weight": "one", "lhs": "1", "rhs": "2"}


class TestSuites:
    def test_task_ranges(self):
        config = ScanConfig(prime_min=3, prime_max=200, lemma_prime_max=30)
        assert CongruenceSuite(Suite.THM11).tasks(config)[0] == 3
        assert CongruenceSuite(Suite.THM12).tasks(config)[0] == 5
        assert CongruenceSuite(Suite.SUN_TAURASO).tasks(config)[0] == 5
        assert CongruenceSuite(Suite.LEMMAS).tasks(config)[-1] == 29
        assert CongruenceSuite(Suite.THM11).tasks(config)[-1] == 199

    @pytest.mark.parametrize("suite", [
        Suite.THM11, Suite.THM12, Suite.CONJ14, Suite.SPLIT,
        Suite.LEMMAS, Suite.MT, Suite.SUN_TAURASO,
    ])
    def test_every_suite_passes_on_small_primes(self, suite):
        config = ScanConfig(prime_min=3, prime_max=31)
        runner = CongruenceSuite(suite)
        for p in runner.tasks(config):
            records = runner.run(p, config)
            assert records
            assert all(r.suite == suite.value and r.index == p for r in records)
            assert not [r for r in records if r.failed]

    def test_pointwise_bound(self):
        config = ScanConfig(prime_min=3, prime_max=13, pointwise_prime_max=7)
        runner = CongruenceSuite(Suite.LEMMAS)
        with_pointwise = {r.equation for r in runner.run(7, config)}
        without = {r.equation for r in runner.run(11, config)}
        assert "quadrant-ratio" in with_pointwise
        assert "quadrant-ratio" not in without

    def test_mt_square_bound(self):
        config = ScanConfig(prime_min=3, prime_max=13, mt_square_prime_max=5)
        runner = CongruenceSuite(Suite.MT)
        assert {r.params["e"] for r in runner.run(5, config)} == {1, 2}
        assert {r.params["e"] for r in runner.run(7, config)} == {1}

    def test_self_test_fails(self):
        config = ScanConfig(prime_min=5, prime_max=50)
        runner = SelfTestSuite()
        assert runner.tasks(config) == [5]
        [record] = runner.run(5, config)
        assert record.failed
        assert record.equation == "double-sum-off-by-one"
