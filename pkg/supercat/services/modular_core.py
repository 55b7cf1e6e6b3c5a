"""
Super Catalan Verifier - Modular Arithmetic Service
Canonical residues, inverses and powers, factorial tables for odd primes,
the Legendre symbol (p/3) and reduction of exact values into Z/pZ and Z/p^2Z.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple, Union

from supercat.exceptions import (
    DenominatorDivisibleByP,
    ModulusMismatch,
    NotAnOddPrime,
    NotInvertible,
)
from supercat.services.exact_core import ExactInt, ExactRat

logger = logging.getLogger(__name__)

# Deterministic for every n < 3,215,031,751.
_MR_WITNESSES = (2, 3, 5, 7)

# Each OddPrime holds two tables of length p.
ODD_PRIME_CACHE_SIZE = 256


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test."""
    if n < 2:
        return False
    for small in _MR_WITNESSES:
        if n == small:
            return True
        if n % small == 0:
            return False

    # write n-1 = d * 2^s
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def odd_primes_between(low: int, high: int) -> List[int]:
    """Odd primes p with low <= p <= high, by a plain sieve."""
    if high < 3:
        return []
    sieve = bytearray([1]) * (high + 1)
    sieve[0:2] = b"\x00\x00"
    for d in range(2, int(high ** 0.5) + 1):
        if sieve[d]:
            sieve[d * d::d] = bytearray(len(range(d * d, high + 1, d)))
    return [p for p in range(max(low, 3), high + 1) if sieve[p]]


@dataclass(frozen=True)
class Residue:
    """Canonical element of Z/mZ, 0 <= value < modulus."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not canonical modulo {self.modulus}")

    def _coerce(self, other: Union["Residue", int]) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"cannot combine residues mod {self.modulus} and mod {other.modulus}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _make(self, value: int) -> "Residue":
        return Residue(value % self.modulus, self.modulus)

    def __add__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._make(self.value + value)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._make(self.value - value)

    def __rsub__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._make(value - self.value)

    def __mul__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._make(self.value * value)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return self._make(-self.value)

    @property
    def signed(self) -> int:
        """Representative of least absolute value, e.g. p-1 -> -1."""
        if self.value > self.modulus // 2:
            return self.value - self.modulus
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def reduce(x: ExactInt, m: int) -> Residue:
    """Canonical representative of x mod m, also for negative x."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    return Residue(x % m, m)


def inverse(a: Residue) -> Residue:
    """Multiplicative inverse of a residue."""
    try:
        return Residue(pow(a.value, -1, a.modulus), a.modulus)
    except ValueError as exc:
        raise NotInvertible(f"{a.value} has no inverse modulo {a.modulus}") from exc


def pow_mod(a: Residue, e: int) -> Residue:
    """a^e by square-and-multiply."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    return Residue(pow(a.value, e, a.modulus), a.modulus)


@dataclass(frozen=True)
class OddPrime:
    """
    An odd prime p with n = (p-1)/2 and its factorial tables mod p.

    Construct through ``odd_prime(p)`` so the tables are built once per prime.
    """

    p: int
    n_half: int = field(init=False, compare=False)
    fact: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    inv_fact: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p = self.p
        if p < 3 or not is_prime(p):
            raise NotAnOddPrime(f"{p} is not an odd prime")

        fact = [1] * p
        for k in range(1, p):
            fact[k] = fact[k - 1] * k % p
        inv_fact = [1] * p
        inv_fact[p - 1] = pow(fact[p - 1], p - 2, p)
        for k in range(p - 1, 0, -1):
            inv_fact[k - 1] = inv_fact[k] * k % p

        object.__setattr__(self, "n_half", (p - 1) // 2)
        object.__setattr__(self, "fact", tuple(fact))
        object.__setattr__(self, "inv_fact", tuple(inv_fact))

    def residue(self, x: ExactInt, power: int = 1) -> Residue:
        """Reduce an exact integer modulo p^power."""
        return reduce(x, self.p ** power)

    def __int__(self) -> int:
        return self.p


@lru_cache(maxsize=ODD_PRIME_CACHE_SIZE)
def odd_prime(p: int) -> OddPrime:
    """Get or build the OddPrime for p."""
    return OddPrime(p)


def _as_prime(p: Union[OddPrime, int]) -> int:
    return p.p if isinstance(p, OddPrime) else p


def reduce_rat(x: ExactRat, p: Union[OddPrime, int], power: int = 1) -> Residue:
    """
    numerator * denominator^-1 modulo p^power.

    Raises DenominatorDivisibleByP when the congruence is not defined at p.
    """
    x = Fraction(x)
    prime = _as_prime(p)
    if x.denominator % prime == 0:
        raise DenominatorDivisibleByP(x, prime)
    modulus = prime ** power
    return reduce(x.numerator, modulus) * inverse(reduce(x.denominator, modulus))


def legendre3(p: Union[OddPrime, int]) -> int:
    """(p/3): +1 if p = 1 mod 3, -1 if p = 2 mod 3, 0 if p = 3."""
    prime = _as_prime(p)
    return (0, 1, -1)[prime % 3]


def legendre3_euler(p: Union[OddPrime, int]) -> int:
    """(p/3) by Euler's criterion p^((3-1)/2) mod 3, mapped to {-1, 0, 1}."""
    value = pow(_as_prime(p), (3 - 1) // 2, 3)
    return value - 3 if value == 2 else value


def binom_mod(n: int, k: int, p: OddPrime) -> Residue:
    """binom(n, k) mod p for 0 <= n < p, from the factorial tables."""
    if not 0 <= n < p.p:
        raise ValueError(f"binom_mod needs 0 <= n < {p.p}, got n = {n}")
    if k < 0 or k > n:
        return Residue(0, p.p)
    return Residue(p.fact[n] * p.inv_fact[k] * p.inv_fact[n - k] % p.p, p.p)
