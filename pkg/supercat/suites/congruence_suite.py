"""
Super Catalan Verifier - Congruence Suite
Brute-force checks, prime by prime, of the double-sum congruences, the
quadrant decomposition behind them, the pointwise and partial-sum lemmas
and the background congruences for central binomials and Catalan numbers.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from supercat.exceptions import PrimeTooSmall
from supercat.models.records import VerificationRecord
from supercat.models.scan import PRIME_CEILING, ScanConfig, Suite
from supercat.services.exact_core import (
    binomial,
    catalan,
    catalan_sequence,
    central_binomial,
    central_binomial_sequence,
    super_catalan,
)
from supercat.services.modular_core import (
    OddPrime,
    Residue,
    binom_mod,
    inverse,
    legendre3,
    odd_prime,
    odd_primes_between,
    pow_mod,
    reduce,
    reduce_rat,
)
from supercat.suites.base import BaseSuite
from supercat.suites.identity_engine import inner_sum_c6

logger = logging.getLogger(__name__)

PrimeLike = Union[OddPrime, int]


class Weight(str, Enum):
    """Weights applied to S(i, j) in the double sums."""
    ONE = "one"
    I_PLUS_J = "i_plus_j"
    AFFINE = "3i_plus_3j_plus_1"

    def factor(self, i: int, j: int) -> int:
        if self is Weight.ONE:
            return 1
        if self is Weight.I_PLUS_J:
            return i + j
        return 3 * i + 3 * j + 1


def _prime(p: PrimeLike) -> OddPrime:
    return p if isinstance(p, OddPrime) else odd_prime(p)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


@dataclass(frozen=True)
class CongruenceCheck:
    """
    Outcome of comparing two sides at one prime.

    Sides are residues for congruences and plain integers for exact
    equalities; ``passed`` compares canonical values either way.
    """
    equation: str
    prime: int
    lhs: Union[Residue, int]
    rhs: Union[Residue, int]
    params: Dict[str, Any] = field(default_factory=dict)
    asserted: bool = True

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def modulus(self):
        return self.lhs.modulus if isinstance(self.lhs, Residue) else None

    def to_record(self, suite: str) -> VerificationRecord:
        return VerificationRecord(
            suite=suite,
            equation=self.equation,
            index=self.prime,
            params=dict(self.params),
            modulus=self.modulus,
            lhs=str(self.lhs),
            rhs=str(self.rhs),
            passed=self.passed,
            asserted=self.asserted,
        )


# ============== Double sums ==============

@lru_cache(maxsize=32)
def super_catalan_table(p: int) -> Tuple[Tuple[int, ...], ...]:
    """Exact S(i, j) for 0 <= i, j < p, filled symmetrically."""
    table = [[0] * p for _ in range(p)]
    for i in range(p):
        for j in range(i, p):
            table[i][j] = table[j][i] = super_catalan(i, j)
    return tuple(tuple(row) for row in table)


@lru_cache(maxsize=4096)
def weighted_double_sums(p: int) -> Mapping[Weight, int]:
    """
    Exact sums over [0, p-1]^2 for every weight, from one pass over the table.

    Kept for many more primes than the tables, so thm11, thm12 and conj14
    read one table build per prime.
    """
    table = super_catalan_table(p)
    totals = dict.fromkeys(Weight, 0)
    for i, row in enumerate(table):
        for j, value in enumerate(row):
            for weight in Weight:
                totals[weight] += weight.factor(i, j) * value
    return MappingProxyType(totals)


def exact_double_sum(
    p: PrimeLike,
    weight: Weight = Weight.ONE,
    i_range: Optional[range] = None,
    j_range: Optional[range] = None,
) -> int:
    """Exact weighted sum of S(i, j) over i_range x j_range (default [0, p-1]^2)."""
    prime = _prime(p).p
    if i_range is None and j_range is None:
        return weighted_double_sums(prime)[weight]
    table = super_catalan_table(prime)
    i_range = range(prime) if i_range is None else i_range
    j_range = range(prime) if j_range is None else j_range
    return sum(weight.factor(i, j) * table[i][j] for i in i_range for j in j_range)


def sum_S(p: PrimeLike, weight: Weight = Weight.ONE) -> Residue:
    """The weighted double sum over [0, p-1]^2, exact then reduced mod p."""
    prime = _prime(p)
    return prime.residue(exact_double_sum(prime, weight))


@dataclass(frozen=True)
class SplitSums:
    """The four quadrant sums, split at n = (p-1)/2."""
    prime: int
    weight: Weight
    exact: Tuple[int, int, int, int]

    def _residue(self, index: int) -> Residue:
        return reduce(self.exact[index], self.prime)

    @property
    def s1(self) -> Residue:
        return self._residue(0)

    @property
    def s2(self) -> Residue:
        return self._residue(1)

    @property
    def s3(self) -> Residue:
        return self._residue(2)

    @property
    def s4(self) -> Residue:
        return self._residue(3)

    @property
    def total(self) -> Residue:
        return reduce(sum(self.exact), self.prime)


def split_sums(p: PrimeLike, weight: Weight = Weight.ONE) -> SplitSums:
    """Quadrants [0,n]x[0,n], [0,n]x[n+1,2n], [n+1,2n]x[0,n], [n+1,2n]x[n+1,2n]."""
    prime = _prime(p)
    low, high = range(prime.n_half + 1), range(prime.n_half + 1, prime.p)
    quadrants = ((low, low), (low, high), (high, low), (high, high))
    return SplitSums(
        prime=prime.p,
        weight=weight,
        exact=tuple(exact_double_sum(prime, weight, rows, cols) for rows, cols in quadrants),
    )


# ============== Main congruences ==============

def check_thm_1_1(p: PrimeLike) -> CongruenceCheck:
    """sum S(i,j) over [0,p-1]^2 = (p/3) mod p, for every odd prime."""
    prime = _prime(p)
    return CongruenceCheck(
        equation="double-sum",
        prime=prime.p,
        lhs=sum_S(prime, Weight.ONE),
        rhs=prime.residue(legendre3(prime)),
    )


def check_thm_1_2(p: PrimeLike) -> CongruenceCheck:
    """sum (i+j) S(i,j) = -8/3 (p/3) mod p, for p >= 5."""
    prime = _prime(p)
    if prime.p < 5:
        raise PrimeTooSmall(prime.p)
    return CongruenceCheck(
        equation="weighted-double-sum",
        prime=prime.p,
        lhs=sum_S(prime, Weight.I_PLUS_J),
        rhs=reduce_rat(Fraction(-8, 3) * legendre3(prime), prime),
    )


def check_conj_1_4(p: PrimeLike) -> CongruenceCheck:
    """sum (3i+3j+1) S(i,j) = -7 (p/3) mod p, including p = 3."""
    prime = _prime(p)
    return CongruenceCheck(
        equation="affine-double-sum",
        prime=prime.p,
        lhs=sum_S(prime, Weight.AFFINE),
        rhs=prime.residue(-7 * legendre3(prime)),
    )


def check_conj_1_4_recombination(p: PrimeLike) -> List[CongruenceCheck]:
    """
    The affine sum as 3 * (weighted sum) + (plain sum): exactly over the
    integers, and as 3 * (-8/3) + 1 = -7 times (p/3) mod p for p >= 5.
    """
    prime = _prime(p)
    if prime.p < 5:
        raise PrimeTooSmall(prime.p)
    plain = exact_double_sum(prime, Weight.ONE)
    weighted = exact_double_sum(prime, Weight.I_PLUS_J)
    return [
        CongruenceCheck(
            equation="affine-recombination-exact",
            prime=prime.p,
            lhs=3 * weighted + plain,
            rhs=exact_double_sum(prime, Weight.AFFINE),
        ),
        CongruenceCheck(
            equation="affine-recombination",
            prime=prime.p,
            lhs=prime.residue(3 * weighted + plain),
            rhs=prime.residue(-7 * legendre3(prime)),
        ),
    ]


# ============== Quadrant closed forms ==============

def s1_plain_closed_form(p: PrimeLike) -> Residue:
    prime = _prime(p)
    return prime.residue(2 * _sign(prime.n_half) - legendre3(prime))


def s2_plain_closed_form(p: PrimeLike) -> Residue:
    prime = _prime(p)
    return prime.residue(legendre3(prime) - _sign(prime.n_half))


def _eight_thirds(prime: OddPrime) -> Residue:
    # undefined at p = 3 even when (p/3) = 0 would cancel it
    return reduce_rat(Fraction(8, 3), prime)


def s1_weighted_closed_form(p: PrimeLike) -> Residue:
    prime = _prime(p)
    return _eight_thirds(prime) * legendre3(prime) - 4 * _sign(prime.n_half)


def s2_weighted_closed_form(p: PrimeLike) -> Residue:
    prime = _prime(p)
    return 2 * _sign(prime.n_half) - _eight_thirds(prime) * legendre3(prime)


def check_s1_plain(p: PrimeLike) -> CongruenceCheck:
    prime = _prime(p)
    return CongruenceCheck(
        equation="s1-closed-form",
        prime=prime.p,
        lhs=split_sums(prime, Weight.ONE).s1,
        rhs=s1_plain_closed_form(prime),
        params={"weight": Weight.ONE.value},
    )


def check_s1_weighted(p: PrimeLike) -> CongruenceCheck:
    prime = _prime(p)
    rhs = s1_weighted_closed_form(prime)
    return CongruenceCheck(
        equation="s1-closed-form",
        prime=prime.p,
        lhs=split_sums(prime, Weight.I_PLUS_J).s1,
        rhs=rhs,
        params={"weight": Weight.I_PLUS_J.value},
    )


def check_s2_plain(p: PrimeLike) -> CongruenceCheck:
    prime = _prime(p)
    return CongruenceCheck(
        equation="s2-closed-form",
        prime=prime.p,
        lhs=split_sums(prime, Weight.ONE).s2,
        rhs=s2_plain_closed_form(prime),
        params={"weight": Weight.ONE.value},
    )


def check_s2_weighted(p: PrimeLike) -> CongruenceCheck:
    prime = _prime(p)
    rhs = s2_weighted_closed_form(prime)
    return CongruenceCheck(
        equation="s2-closed-form",
        prime=prime.p,
        lhs=split_sums(prime, Weight.I_PLUS_J).s2,
        rhs=rhs,
        params={"weight": Weight.I_PLUS_J.value},
    )


def check_s1_closed_form(p: PrimeLike) -> Tuple[CongruenceCheck, CongruenceCheck]:
    """
    (plain, weighted) first-quadrant closed forms. The weighted form involves
    8/3, so p = 3 raises DenominatorDivisibleByP.
    """
    return check_s1_plain(p), check_s1_weighted(p)


def check_s2_closed_form(p: PrimeLike) -> Tuple[CongruenceCheck, CongruenceCheck]:
    """(plain, weighted) second-quadrant closed forms; p = 3 raises as above."""
    return check_s2_plain(p), check_s2_weighted(p)


def check_s2_intermediate_forms(p: PrimeLike) -> List[CongruenceCheck]:
    """
    Second-quadrant sums against the expressions they pass through before
    the closed form: (-12)^n - (-4)^n for the plain weight, the reindexed
    inner-sum expression for (i+j), and its simplification over 3 (p >= 5).
    """
    prime = _prime(p)
    n = prime.n_half
    plain = split_sums(prime, Weight.ONE)
    weighted = split_sums(prime, Weight.I_PLUS_J)

    inner_total = sum(
        (4 ** j * inner_sum_c6(n, j)[1] for j in range(1, n + 1)),
        Fraction(0),
    )
    checks = [
        CongruenceCheck(
            equation="s2-geometric-form",
            prime=prime.p,
            lhs=plain.s2,
            rhs=prime.residue((-12) ** n - (-4) ** n),
            params={"weight": Weight.ONE.value},
        ),
        CongruenceCheck(
            equation="s2-inner-sum-form",
            prime=prime.p,
            lhs=weighted.s2,
            rhs=reduce_rat(Fraction((-4) ** n, 2) * inner_total, prime),
            params={"weight": Weight.I_PLUS_J.value},
        ),
    ]
    if prime.p >= 5:
        checks.append(CongruenceCheck(
            equation="s2-geometric-form",
            prime=prime.p,
            lhs=weighted.s2,
            rhs=reduce_rat(
                Fraction((-12) ** n * (10 * n - 3) + (-4) ** n * (3 - 6 * n), 3), prime
            ),
            params={"weight": Weight.I_PLUS_J.value},
        ))
    return checks


def check_split_decomposition(p: PrimeLike, weight: Weight) -> List[CongruenceCheck]:
    """Quadrant additivity, S2 = S3 exactly, S4 = 0 mod p and sum = S1 + 2 S2."""
    prime = _prime(p)
    split = split_sums(prime, weight)
    total = sum_S(prime, weight)
    params = {"weight": weight.value}
    return [
        CongruenceCheck("quadrant-additivity", prime.p, split.total, total, params),
        CongruenceCheck("quadrant-symmetry", prime.p, split.exact[1], split.exact[2], params),
        CongruenceCheck("quadrant-s4-vanishes", prime.p, split.s4, Residue(0, prime.p), params),
        CongruenceCheck("quadrant-chain", prime.p, total, split.s1 + 2 * split.s2, params),
    ]


def check_theorem_recomposition(p: PrimeLike) -> List[CongruenceCheck]:
    """
    The quadrant closed forms recombine to the theorem right-hand sides:
    S1 + 2 S2 gives (p/3), and -8/3 (p/3) for the weighted sums (p >= 5).
    """
    prime = _prime(p)
    checks = [CongruenceCheck(
        equation="theorem-recomposition",
        prime=prime.p,
        lhs=s1_plain_closed_form(prime) + 2 * s2_plain_closed_form(prime),
        rhs=prime.residue(legendre3(prime)),
        params={"weight": Weight.ONE.value},
    )]
    if prime.p >= 5:
        checks.append(CongruenceCheck(
            equation="theorem-recomposition",
            prime=prime.p,
            lhs=s1_weighted_closed_form(prime) + 2 * s2_weighted_closed_form(prime),
            rhs=reduce_rat(Fraction(-8, 3) * legendre3(prime), prime),
            params={"weight": Weight.I_PLUS_J.value},
        ))
    return checks


# ============== Pointwise lemmas ==============

def check_pointwise_lemmas(p: PrimeLike) -> List[CongruenceCheck]:
    """
    Every instance of the pointwise congruences behind the quadrant closed
    forms, with n = (p-1)/2:

    - central-binomial-lift: binom(2i,i) = (-4)^i binom(n,i), 0 <= i <= n
    - shifted-binomial: binom(n+j,j) = binom(2j,j)/4^j, 1 <= j <= n
    - quadrant-ratio-vanishes: S(i, j+n) = 0 for i+j <= n
    - quadrant-ratio: S(i, j+n) = (-1)^i 4^(i+j) binom(j-1, n-i)/2 for i+j >= n+1
    - quadrant-ratio-factorial: binom(2j+2n,j+n)/binom(i+j+n,i)
      = i! (2j-1)! / ((n+j)! (i+j-n-1)!) for i+j >= n+1
    """
    prime = _prime(p)
    P, n = prime.p, prime.n_half
    table = super_catalan_table(P)
    four = Residue(4 % P, P)
    half = inverse(Residue(2, P))
    checks: List[CongruenceCheck] = []

    for i in range(n + 1):
        checks.append(CongruenceCheck(
            equation="central-binomial-lift",
            prime=P,
            lhs=prime.residue(central_binomial(i)),
            rhs=prime.residue((-4) ** i) * binom_mod(n, i, prime),
            params={"i": i},
        ))

    for j in range(1, n + 1):
        checks.append(CongruenceCheck(
            equation="shifted-binomial",
            prime=P,
            lhs=binom_mod(n + j, j, prime),
            rhs=prime.residue(central_binomial(j)) * inverse(pow_mod(four, j)),
            params={"j": j},
        ))

    for i in range(n + 1):
        for j in range(1, n + 1):
            lhs = prime.residue(table[i][j + n])
            if i + j <= n:
                checks.append(CongruenceCheck(
                    equation="quadrant-ratio-vanishes",
                    prime=P,
                    lhs=lhs,
                    rhs=Residue(0, P),
                    params={"i": i, "j": j},
                ))
                continue
            checks.append(CongruenceCheck(
                equation="quadrant-ratio",
                prime=P,
                lhs=lhs,
                rhs=prime.residue(_sign(i)) * pow_mod(four, i + j)
                    * binom_mod(j - 1, n - i, prime) * half,
                params={"i": i, "j": j},
            ))
            ratio = Fraction(binomial(2 * j + 2 * n, j + n), binomial(i + j + n, i))
            factorial_form = (
                prime.fact[i] * prime.fact[2 * j - 1]
                * prime.inv_fact[n + j] * prime.inv_fact[i + j - n - 1]
            )
            checks.append(CongruenceCheck(
                equation="quadrant-ratio-factorial",
                prime=P,
                lhs=reduce_rat(ratio, prime),
                rhs=prime.residue(factorial_form),
                params={"i": i, "j": j},
            ))
    return checks


def check_partial_sums(p: PrimeLike) -> List[CongruenceCheck]:
    """
    Partial sums and single values used in the first-quadrant argument.
    The (-3/4)-power sums need p >= 5; the rest hold from p = 3.
    """
    prime = _prime(p)
    P, n = prime.p, prime.n_half
    checks: List[CongruenceCheck] = []

    if P >= 5:
        ratio = reduce_rat(Fraction(-3, 4), prime)
        catalan_partial = sum(
            (prime.residue(catalan(k)) * pow_mod(ratio, k + 1) for k in range(n + 1)),
            Residue(0, P),
        )
        central_partial = sum(
            (prime.residue(central_binomial(k)) * pow_mod(ratio, k) for k in range(n + 1)),
            Residue(0, P),
        )
        checks.append(CongruenceCheck(
            equation="catalan-partial-sum",
            prime=P,
            lhs=catalan_partial,
            rhs=reduce_rat(Fraction(-3, 2), prime),
        ))
        checks.append(CongruenceCheck(
            equation="central-partial-sum",
            prime=P,
            lhs=central_partial,
            rhs=Residue(1, P),
        ))

    last = catalan(P - 1)
    checks.append(CongruenceCheck(
        equation="catalan-last",
        prime=P,
        lhs=prime.residue(last),
        rhs=prime.residue(-1),
    ))
    checks.append(CongruenceCheck(
        equation="catalan-last-alternative",
        prime=P,
        lhs=last * (2 * P - 1),
        rhs=binomial(2 * P - 1, P - 1),
    ))
    checks.append(CongruenceCheck(
        equation="central-middle",
        prime=P,
        lhs=prime.residue(central_binomial(n)),
        rhs=prime.residue(_sign(n)),
    ))
    for k in range(n + 1, 2 * n):
        checks.append(CongruenceCheck(
            equation="catalan-upper-vanishes",
            prime=P,
            lhs=prime.residue(catalan(k)),
            rhs=Residue(0, P),
            params={"k": k},
        ))
    return checks


# ============== Background congruences ==============

def _series_mod(values, P: int) -> List[int]:
    return [v % P for v in values]


def _horner(coefficients: List[int], x: int, P: int) -> int:
    acc = 0
    for c in reversed(coefficients):
        acc = (acc * x + c) % P
    return acc


def check_mt_pointwise(p: PrimeLike, e: int = 1) -> List[CongruenceCheck]:
    """
    With q = p^e, at every x in [0, p-1]:
    sum_{k<q} binom(2k,k) x^k = (1-4x)^((q-1)/2) and
    sum_{k<q} C_k x^(k+1) = (1 - (1-4x)^((q+1)/2))/2 - x^q, both mod p.
    """
    prime = _prime(p)
    P = prime.p
    q = P ** e
    if e < 1 or q > PRIME_CEILING:
        raise ValueError(f"need e >= 1 and q = p^e <= {PRIME_CEILING}, got q = {q}")

    centrals = _series_mod(central_binomial_sequence(q), P)
    catalans = _series_mod(catalan_sequence(q), P)
    half = inverse(Residue(2, P))
    checks: List[CongruenceCheck] = []
    for x in range(P):
        base = Residue((1 - 4 * x) % P, P)
        checks.append(CongruenceCheck(
            equation="central-generating-pointwise",
            prime=P,
            lhs=Residue(_horner(centrals, x, P), P),
            rhs=pow_mod(base, (q - 1) // 2),
            params={"e": e, "x": x},
        ))
        checks.append(CongruenceCheck(
            equation="catalan-generating-pointwise",
            prime=P,
            lhs=Residue(_horner(catalans, x, P) * x % P, P),
            rhs=(1 - pow_mod(base, (q + 1) // 2)) * half - pow(x, q, P),
            params={"e": e, "x": x},
        ))
    return checks


def mt_coefficient_pairs(p: PrimeLike, e: int = 1) -> List[Tuple[int, Residue, Residue]]:
    """
    (k, binom(2k,k) mod p, [x^k](1-4x)^((q-1)/2) mod p) for 0 <= k < q.
    Both sides come from exact integers.
    """
    prime = _prime(p)
    P = prime.p
    q = P ** e
    half = (q - 1) // 2
    centrals = central_binomial_sequence(q)
    pairs = []
    coefficient = 1  # binom(half, k) * (-4)^k, updated exactly
    for k in range(q):
        rhs = coefficient if k <= half else 0
        pairs.append((k, reduce(centrals[k], P), reduce(rhs, P)))
        if k < half:
            coefficient = coefficient * (half - k) * -4 // (k + 1)
    return pairs


def check_mt_coefficientwise(p: PrimeLike, e: int = 1) -> CongruenceCheck:
    """
    Coefficient-by-coefficient form of the central binomial generating
    congruence. The sides reported are those of the first mismatching
    coefficient, or of the last one when all agree.
    """
    prime = _prime(p)
    pairs = mt_coefficient_pairs(prime, e)
    witness = next((pair for pair in pairs if pair[1] != pair[2]), pairs[-1])
    k, lhs, rhs = witness
    return CongruenceCheck(
        equation="central-generating-coefficientwise",
        prime=prime.p,
        lhs=lhs,
        rhs=rhs,
        params={"e": e, "k": k, "coefficients": len(pairs)},
        asserted=(e == 1),
    )


def check_sun_tauraso_p2(p: PrimeLike) -> Tuple[CongruenceCheck, CongruenceCheck]:
    """sum_{k<p} binom(2k,k) = (p/3) and sum_{k<p} C_k = 3/2 (p/3) - 1/2, mod p^2."""
    prime = _prime(p)
    if prime.p < 5:
        raise PrimeTooSmall(prime.p)
    P = prime.p
    symbol = legendre3(prime)
    return (
        CongruenceCheck(
            equation="central-sum-mod-p2",
            prime=P,
            lhs=prime.residue(sum(central_binomial_sequence(P)), power=2),
            rhs=prime.residue(symbol, power=2),
        ),
        CongruenceCheck(
            equation="catalan-sum-mod-p2",
            prime=P,
            lhs=prime.residue(sum(catalan_sequence(P)), power=2),
            rhs=reduce_rat(Fraction(3, 2) * symbol - Fraction(1, 2), prime, power=2),
        ),
    )


# ============== Suites ==============

class CongruenceSuite(BaseSuite):
    """
    Prime-indexed suite. One task per prime in the configured range,
    restricted to the primes each family of checks is stated for.
    """

    def __init__(self, suite: Suite):
        super().__init__(name=suite.value)
        self.suite = suite

    def tasks(self, config: ScanConfig) -> List[int]:
        low, high = config.prime_min, config.prime_max
        if self.suite in (Suite.THM12, Suite.SUN_TAURASO):
            low = max(low, 5)
        if self.suite in (Suite.SPLIT, Suite.LEMMAS, Suite.MT, Suite.SUN_TAURASO):
            high = min(high, config.lemma_prime_max)
        return odd_primes_between(low, high)

    def run(self, task: int, config: ScanConfig) -> List[VerificationRecord]:
        prime = odd_prime(task)
        checks = self._checks(prime, config)
        self.log_step("prime", f"p = {prime.p}: {len(checks)} checks")
        records = [check.to_record(self.name) for check in checks]
        self.report_failures(records)
        return records

    def _checks(self, prime: OddPrime, config: ScanConfig) -> List[CongruenceCheck]:
        P = prime.p
        if self.suite == Suite.THM11:
            return [check_thm_1_1(prime)]
        if self.suite == Suite.THM12:
            return [check_thm_1_2(prime)]
        if self.suite == Suite.CONJ14:
            checks = [check_conj_1_4(prime)]
            if P >= 5:
                checks += check_conj_1_4_recombination(prime)
            return checks
        if self.suite == Suite.SPLIT:
            checks = []
            for weight in Weight:
                checks += check_split_decomposition(prime, weight)
            checks += [check_s1_plain(prime), check_s2_plain(prime)]
            if P >= 5:
                checks += [check_s1_weighted(prime), check_s2_weighted(prime)]
            checks += check_s2_intermediate_forms(prime)
            checks += check_theorem_recomposition(prime)
            return checks
        if self.suite == Suite.LEMMAS:
            checks = check_partial_sums(prime)
            if P <= config.pointwise_prime_max:
                checks += check_pointwise_lemmas(prime)
            return checks
        if self.suite == Suite.MT:
            checks = check_mt_pointwise(prime, 1) + [check_mt_coefficientwise(prime, 1)]
            if P <= config.mt_square_prime_max and P * P <= PRIME_CEILING:
                checks += check_mt_pointwise(prime, 2)
                checks.append(check_mt_coefficientwise(prime, 2))
            return checks
        if self.suite == Suite.SUN_TAURASO:
            return list(check_sun_tauraso_p2(prime))
        raise ValueError(f"{self.suite} is not a prime-indexed suite")


SELF_TEST_SUITE = "self_test"


class SelfTestSuite(BaseSuite):
    """Injects a congruence known to be false so the failure path is exercised."""

    def __init__(self):
        super().__init__(name=SELF_TEST_SUITE)

    def tasks(self, config: ScanConfig) -> List[int]:
        return odd_primes_between(config.prime_min, config.prime_max)[:1]

    def run(self, task: int, config: ScanConfig) -> List[VerificationRecord]:
        prime = odd_prime(task)
        check = CongruenceCheck(
            equation="double-sum-off-by-one",
            prime=prime.p,
            lhs=sum_S(prime, Weight.ONE),
            rhs=prime.residue(legendre3(prime) + 1),
        )
        record = check.to_record(self.name)
        self.report_failures([record])
        return [record]
