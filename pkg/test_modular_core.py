"""
Tests for the modular arithmetic service.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supercat.exceptions import (
    DenominatorDivisibleByP,
    ModulusMismatch,
    NotAnOddPrime,
    NotInvertible,
)
from supercat.services.exact_core import binomial
from supercat.services.modular_core import (
    ODD_PRIME_CACHE_SIZE,
    Residue,
    binom_mod,
    inverse,
    is_prime,
    legendre3,
    legendre3_euler,
    odd_prime,
    odd_primes_between,
    pow_mod,
    reduce,
    reduce_rat,
)

SMALL_PRIMES = odd_primes_between(3, 1000)


def test_odd_primes_between():
    assert odd_primes_between(1, 20) == [3, 5, 7, 11, 13, 17, 19]
    assert odd_primes_between(5, 5) == [5]
    assert odd_primes_between(8, 10) == []
    assert odd_primes_between(0, 2) == []


@given(st.integers(min_value=-5, max_value=5000))
@settings(max_examples=300)
def test_is_prime_agrees_with_trial_division(n):
    expected = n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))
    assert is_prime(n) == expected


def test_is_prime_large():
    assert is_prime(2_147_483_647)
    assert not is_prime(100_160_063)  # 10007 * 10009
    assert not is_prime(41_041)  # Carmichael


class TestResidue:
    def test_canonical_only(self):
        with pytest.raises(ValueError):
            Residue(5, 5)
        with pytest.raises(ValueError):
            Residue(-1, 5)

    def test_reduce_negative(self):
        assert reduce(-1, 5) == Residue(4, 5)
        assert reduce(-1, 5).signed == -1
        with pytest.raises(ValueError):
            reduce(3, 1)

    def test_arithmetic(self):
        a, b = Residue(3, 7), Residue(5, 7)
        assert a + b == Residue(1, 7)
        assert a - b == Residue(5, 7)
        assert a * b == Residue(1, 7)
        assert -a == Residue(4, 7)
        assert 2 * a == Residue(6, 7)
        assert 1 - a == Residue(5, 7)
        assert str(a) == "3"

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatch):
            Residue(1, 5) + Residue(1, 7)

    def test_inverse(self):
        assert inverse(Residue(3, 7)) == Residue(5, 7)
        with pytest.raises(NotInvertible):
            inverse(Residue(3, 9))

    def test_pow_mod(self):
        assert pow_mod(Residue(2, 7), 3) == Residue(1, 7)
        assert pow_mod(Residue(2, 7), 0) == Residue(1, 7)
        with pytest.raises(ValueError):
            pow_mod(Residue(2, 7), -1)


class TestOddPrime:
    def test_rejects_non_odd_primes(self):
        for n in (1, 2, 9, 15):
            with pytest.raises(NotAnOddPrime):
                odd_prime(n)

    def test_cached(self):
        assert odd_prime(11) is odd_prime(11)
        assert odd_prime(11).n_half == 5
        assert int(odd_prime(11)) == 11

    def test_cache_is_bounded(self):
        info = odd_prime.cache_info()
        assert info.maxsize == ODD_PRIME_CACHE_SIZE
        for p in odd_primes_between(3, 3000):
            odd_prime(p)
        assert odd_prime.cache_info().currsize <= ODD_PRIME_CACHE_SIZE
        assert odd_prime(2999).fact[2998] == 2998

    @pytest.mark.parametrize("p", odd_primes_between(3, 300))
    def test_factorial_tables(self, p):
        prime = odd_prime(p)
        assert prime.fact[p - 1] == p - 1  # Wilson
        for k in range(p):
            assert prime.fact[k] * prime.inv_fact[k] % p == 1

    def test_residue_power(self):
        assert odd_prime(5).residue(99, power=2) == Residue(24, 25)


class TestReduceRat:
    def test_value(self):
        assert reduce_rat(Fraction(-8, 3), 5) == Residue(4, 5)
        assert reduce_rat(Fraction(1, 2), odd_prime(7)) == Residue(4, 7)
        assert reduce_rat(Fraction(-2), 5, power=2) == Residue(23, 25)

    def test_denominator_divisible(self):
        with pytest.raises(DenominatorDivisibleByP) as info:
            reduce_rat(Fraction(8, 3), 3)
        assert info.value.prime == 3
        assert isinstance(info.value, ZeroDivisionError)


def test_legendre3():
    assert legendre3(3) == 0
    assert legendre3(5) == -1
    assert legendre3(7) == 1
    assert legendre3(odd_prime(13)) == 1
    for p in SMALL_PRIMES:
        assert legendre3(p) == legendre3_euler(p)


@pytest.mark.parametrize("p", [3, 5, 13, 29])
def test_binom_mod_matches_exact(p):
    prime = odd_prime(p)
    for n in range(p):
        for k in range(-1, n + 2):
            assert binom_mod(n, k, prime) == reduce(binomial(n, k), p)


def test_binom_mod_range():
    with pytest.raises(ValueError):
        binom_mod(5, 2, odd_prime(5))


@pytest.mark.slow
@pytest.mark.parametrize("p", odd_primes_between(3, 100))
def test_binom_mod_matches_exact_below_100(p):
    prime = odd_prime(p)
    for n in range(p):
        for k in range(n + 1):
            assert binom_mod(n, k, prime) == reduce(binomial(n, k), p)
