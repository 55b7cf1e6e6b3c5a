"""
Super Catalan Verifier - Exact Combinatorics Service
Arbitrary-precision binomials, Catalan, central binomial and super Catalan
numbers, plus exact rational powers.
"""
import logging
import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from supercat.config import settings
from supercat.exceptions import InexactDivision

logger = logging.getLogger(__name__)

# Python ints are unbounded and Fraction keeps itself reduced with a positive
# denominator, so both serve directly as the exact number types.
ExactInt = int
ExactRat = Fraction


class PascalCache:
    """
    Memoized Pascal triangle.

    Rows grow on demand up to ``max_row`` and are published as tuples, so a
    row is never mutated once readers can see it. Growth is serialized by a
    lock; lookups of already published rows take no lock.
    """

    def __init__(self, max_row: int, preallocate: int = 0):
        if max_row < 0:
            raise ValueError(f"max_row must be non-negative, got {max_row}")
        self.max_row = max_row
        self._rows: List[Tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()
        if preallocate:
            self.row(min(preallocate, max_row))

    @property
    def built_rows(self) -> int:
        """Number of rows published so far."""
        return len(self._rows)

    def covers(self, n: int) -> bool:
        return 0 <= n <= self.max_row

    def row(self, n: int) -> Tuple[int, ...]:
        """Return row n of the triangle, building missing rows first."""
        if not self.covers(n):
            raise ValueError(f"row {n} outside cache range [0, {self.max_row}]")
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                inner = tuple(prev[k - 1] + prev[k] for k in range(1, len(prev)))
                self._rows.append((1,) + inner + (1,))
            logger.debug(f"Pascal cache grown to {len(self._rows)} rows")
            return self._rows[n]

    def binomial(self, n: int, k: int) -> ExactInt:
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]


_pascal: Optional[PascalCache] = None


def get_pascal_cache() -> PascalCache:
    """Get or create the shared Pascal cache."""
    global _pascal
    if _pascal is None:
        _pascal = PascalCache(settings.PASCAL_MAX_ROW)
    return _pascal


def prepare_pascal_cache(prime_max: int) -> PascalCache:
    """
    Size the shared cache for a scan over primes up to ``prime_max``.

    The ceiling is 4 * prime_max, capped by ``PASCAL_MAX_ROW``. Rows up to
    2 * prime_max, the largest the per-prime double sums read, are built
    up front; anything above grows on demand.
    """
    global _pascal
    if prime_max < 0:
        raise ValueError(f"prime_max must be non-negative, got {prime_max}")
    ceiling = min(4 * prime_max, settings.PASCAL_MAX_ROW)
    cache = get_pascal_cache()
    if cache.max_row != ceiling:
        cache = PascalCache(ceiling)
        _pascal = cache
    cache.row(min(2 * prime_max, ceiling))
    logger.debug(f"Pascal cache ready: {cache.built_rows} rows, ceiling {ceiling}")
    return cache


def falling_factorial_binomial(n: int, k: int) -> ExactInt:
    """binom(n, k) from the product n(n-1)...(n-k+1)/k!, without any cache."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(k):
        # each partial product is itself a binomial, so the division is exact
        result = result * (n - i) // (i + 1)
    return result


def binomial(n: int, k: int) -> ExactInt:
    """
    Exact binomial coefficient.

    Returns 0 when k is outside [0, n]. Rows inside the Pascal cache range are
    served from the cache, larger rows fall back to ``math.comb``.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    cache = get_pascal_cache()
    if cache.covers(n):
        return cache.binomial(n, k)
    return math.comb(n, k)


def central_binomial(n: int) -> ExactInt:
    """binom(2n, n)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return binomial(2 * n, n)


def catalan(n: int) -> ExactInt:
    """The n-th Catalan number binom(2n, n)/(n+1)."""
    quotient, remainder = divmod(central_binomial(n), n + 1)
    if remainder:
        raise InexactDivision(f"binom({2 * n},{n}) is not divisible by {n + 1}")
    return quotient


def super_catalan(m: int, n: int) -> ExactInt:
    """
    Super Catalan number S(m, n) = binom(2m,m) binom(2n,n) / binom(m+n,m).

    The division is carried out on exact integers. Reducing modulo a prime
    has to happen afterwards, since binom(m+n, m) is often divisible by it.
    """
    if m < 0 or n < 0:
        raise ValueError(f"arguments must be non-negative, got ({m}, {n})")
    numerator = central_binomial(m) * central_binomial(n)
    quotient, remainder = divmod(numerator, binomial(m + n, m))
    if remainder:
        raise InexactDivision(f"S({m},{n}) is not an integer")
    return quotient


@lru_cache(maxsize=8)
def central_binomial_sequence(length: int) -> Tuple[int, ...]:
    """binom(2k, k) for 0 <= k < length, built by the ratio 2(2k+1)/(k+1)."""
    values = [1]
    for k in range(length - 1):
        values.append(values[-1] * 2 * (2 * k + 1) // (k + 1))
    return tuple(values[:length])


@lru_cache(maxsize=8)
def catalan_sequence(length: int) -> Tuple[int, ...]:
    """C_k for 0 <= k < length."""
    centrals = central_binomial_sequence(length)
    return tuple(c // (k + 1) for k, c in enumerate(centrals))


def compute_value(kind: str, n: int, m: Optional[int] = None) -> ExactInt:
    """Exact value for a `compute` request: supercatalan, catalan or centralbinom."""
    if n < 0 or (m is not None and m < 0):
        raise ValueError("arguments must be non-negative integers")
    if kind == "supercatalan":
        if m is None:
            raise ValueError("supercatalan needs both m and n")
        return super_catalan(m, n)
    if kind == "catalan":
        return catalan(n)
    if kind == "centralbinom":
        return central_binomial(n)
    raise ValueError(f"unknown kind: {kind}")


def rat_pow(base: Fraction, e: int) -> ExactRat:
    """Exact power of a rational; negative exponents need a non-zero base."""
    base = Fraction(base)
    if base == 0 and e < 0:
        raise ZeroDivisionError(f"0 cannot be raised to the negative power {e}")
    return base ** e
