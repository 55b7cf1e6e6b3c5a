"""
Super Catalan Verifier - Identity Engine
Exact rational verification of the two double-sum identities, of the
third-order recurrences both sides satisfy, and of the inner-sum closed form.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

from supercat.models.records import VerificationRecord
from supercat.models.scan import ScanConfig, Suite
from supercat.services.exact_core import (
    ExactRat,
    binomial,
    catalan,
    central_binomial,
    rat_pow,
)
from supercat.suites.base import BaseSuite

logger = logging.getLogger(__name__)

MINUS_THREE_QUARTERS = Fraction(-3, 4)


@dataclass(frozen=True)
class IdentitySide:
    """One side of an identity as a total map n -> exact rational."""
    name: str
    evaluator: Callable[[int], ExactRat]

    def __call__(self, n: int) -> ExactRat:
        return self.evaluator(n)


@dataclass(frozen=True)
class RecurrenceSpec:
    """
    Third-order recurrence sum_{j=0..3} coeff(j, n) s(n+j) = 0 with
    polynomial coefficients given as callables of n.
    """
    name: str
    coefficients: Tuple[Callable[[int], int], Callable[[int], int],
                        Callable[[int], int], Callable[[int], int]]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coeff(self, j: int, n: int) -> int:
        return self.coefficients[j](n)

    def residual(self, seq: Callable[[int], ExactRat], n: int) -> ExactRat:
        return sum(
            (self.coeff(j, n) * Fraction(seq(n + j)) for j in range(self.order + 1)),
            Fraction(0),
        )


def _double_sum(n: int, weighted: bool) -> ExactRat:
    total = Fraction(0)
    row = [binomial(n, i) for i in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            weight = (i + j) if weighted else 1
            if weight == 0:
                continue
            total += Fraction((-4) ** (i + j) * weight * row[i] * row[j], binomial(i + j, i))
    return total


@lru_cache(maxsize=None)
def lhs_b1(n: int) -> ExactRat:
    """sum_{i,j=0..n} (-4)^(i+j) binom(n,i) binom(n,j) / binom(i+j,i)."""
    return _double_sum(n, weighted=False)


@lru_cache(maxsize=None)
def rhs_b1(n: int) -> ExactRat:
    """Closed form of ``lhs_b1``."""
    head = Fraction((-3) ** n * (2 * n - 1), 4 * (n + 1))
    partial = sum(
        (catalan(k) * rat_pow(MINUS_THREE_QUARTERS, k + 1) for k in range(n + 1)),
        Fraction(0),
    )
    return head + Fraction(4 ** n, central_binomial(n)) * (Fraction(1, 2) - partial)


@lru_cache(maxsize=None)
def lhs_c1(n: int) -> ExactRat:
    """The double sum of ``lhs_b1`` with each term weighted by (i+j)."""
    return _double_sum(n, weighted=True)


@lru_cache(maxsize=None)
def rhs_c1(n: int) -> ExactRat:
    """Closed form of ``lhs_c1``; both terms carry the factor n."""
    if n == 0:
        return Fraction(0)
    head = 16 * n * rat_pow(Fraction(-3), n - 1)
    partial = sum(
        (central_binomial(k) * rat_pow(MINUS_THREE_QUARTERS, k) for k in range(n + 1)),
        Fraction(0),
    )
    return head + Fraction(8 * n * 4 ** n, central_binomial(n)) * partial


LHS_B1 = IdentitySide("lhs_b1", lhs_b1)
RHS_B1 = IdentitySide("rhs_b1", rhs_b1)
LHS_C1 = IdentitySide("lhs_c1", lhs_c1)
RHS_C1 = IdentitySide("rhs_c1", rhs_c1)

REC_B1 = RecurrenceSpec(
    "rec_b1",
    (
        lambda n: -18 * (n + 1),
        lambda n: 3 * (2 * n - 5),
        lambda n: 2 * (5 * n + 6),
        lambda n: 2 * n + 5,
    ),
)

REC_C1 = RecurrenceSpec(
    "rec_c1",
    (
        lambda n: -6 * (n + 1) * (581 * n + 793),
        lambda n: 818 * n * n - 6653 * n - 9936,
        lambda n: 2166 * n * n + 3474 * n + 2898,
        lambda n: (2 * n + 5) * (251 * n + 92),
    ),
)


def check_identity(
    side_l: IdentitySide,
    side_r: IdentitySide,
    n_max: int,
    suite: str = "identity",
    equation: str = "identity",
) -> List[VerificationRecord]:
    """One record per n in [0, n_max]; passes iff both sides are equal."""
    records = []
    for n in range(n_max + 1):
        left, right = side_l(n), side_r(n)
        records.append(VerificationRecord(
            suite=suite,
            equation=equation,
            index=n,
            params={"lhs_side": side_l.name, "rhs_side": side_r.name},
            lhs=str(left),
            rhs=str(right),
            passed=left == right,
        ))
    return records


def check_recurrence(
    seq: IdentitySide,
    rec: RecurrenceSpec,
    n_max: int,
    suite: str = "recurrences",
) -> List[VerificationRecord]:
    """One record per n in [0, n_max]; passes iff the recurrence annihilates seq at n."""
    records = []
    for n in range(n_max + 1):
        residual = rec.residual(seq, n)
        records.append(VerificationRecord(
            suite=suite,
            equation="recurrence",
            index=n,
            params={"sequence": seq.name, "recurrence": rec.name},
            lhs=str(residual),
            rhs="0",
            passed=residual == 0,
        ))
    return records


def forward_substitute(
    rec: RecurrenceSpec,
    initial: Sequence[ExactRat],
    n_max: int,
) -> List[ExactRat]:
    """
    Extend initial values s(0..order-1) to s(0..n_max) by solving the
    recurrence for its leading term.
    """
    values = [Fraction(v) for v in initial[:rec.order]]
    n = 0
    while len(values) <= n_max:
        lead = rec.coeff(rec.order, n)
        if lead == 0:
            raise ZeroDivisionError(f"{rec.name}: leading coefficient vanishes at n = {n}")
        lower = sum(
            (rec.coeff(j, n) * values[n + j] for j in range(rec.order)),
            Fraction(0),
        )
        values.append(-lower / lead)
        n += 1
    return values[:n_max + 1]


def check_uniqueness(
    seq: IdentitySide,
    rec: RecurrenceSpec,
    n_max: int,
    suite: str = "recurrences",
) -> List[VerificationRecord]:
    """
    The solution of ``rec`` seeded with seq's first values agrees with seq
    on [0, n_max], so the recurrence plus initial values pin the sequence.
    """
    predicted = forward_substitute(rec, [seq(k) for k in range(rec.order)], n_max)
    return [
        VerificationRecord(
            suite=suite,
            equation="recurrence-uniqueness",
            index=n,
            params={"sequence": seq.name, "recurrence": rec.name},
            lhs=str(value),
            rhs=str(seq(n)),
            passed=value == seq(n),
        )
        for n, value in enumerate(predicted)
    ]


def inner_sum_c6(n: int, j: int) -> Tuple[ExactRat, ExactRat]:
    """
    (direct, closed) for sum_{i=0..n} (2n+j-i) binom(j-1,i) (-1/4)^i, whose
    closed form is (2n+j)(3/4)^(j-1) + ((j-1)/4)(3/4)^(j-2).
    """
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got n = {n}, j = {j}")
    quarter = Fraction(-1, 4)
    direct = sum(
        ((2 * n + j - i) * binomial(j - 1, i) * rat_pow(quarter, i) for i in range(n + 1)),
        Fraction(0),
    )
    three_quarters = Fraction(3, 4)
    closed = (2 * n + j) * rat_pow(three_quarters, j - 1)
    if j > 1:
        # (3/4)^(j-2) only exists as a polynomial term once the factor (j-1) is non-zero
        closed += Fraction(j - 1, 4) * rat_pow(three_quarters, j - 2)
    return direct, closed


def check_inner_sums(n_max: int, suite: str = Suite.IDENTITY_C1.value) -> List[VerificationRecord]:
    """Closed form versus direct inner sum for every 1 <= j <= n <= n_max."""
    records = []
    for n in range(1, n_max + 1):
        for j in range(1, n + 1):
            direct, closed = inner_sum_c6(n, j)
            records.append(VerificationRecord(
                suite=suite,
                equation="inner-sum-closed-form",
                index=n,
                params={"j": j},
                lhs=str(direct),
                rhs=str(closed),
                passed=direct == closed,
            ))
    return records


class IdentitySuite(BaseSuite):
    """
    Exact identity check over the window [0, identity_n_max].

    The plain identity runs as ``identity_b1``; the weighted one runs as
    ``identity_c1`` together with the inner-sum closed form.
    """

    def __init__(self, suite: Suite):
        super().__init__(name=suite.value)
        self.suite = suite

    def tasks(self, config: ScanConfig) -> List[int]:
        return [config.identity_n_max]

    def run(self, task: int, config: ScanConfig) -> List[VerificationRecord]:
        if self.suite == Suite.IDENTITY_B1:
            records = check_identity(LHS_B1, RHS_B1, task, self.name, "double-sum-identity")
        else:
            records = check_identity(LHS_C1, RHS_C1, task, self.name, "weighted-double-sum-identity")
            records += check_inner_sums(config.inner_sum_n_max, self.name)
        self.log_step("identity", f"{len(records)} records up to n = {task}")
        self.report_failures(records)
        return records


class RecurrenceSuite(BaseSuite):
    """Both recurrences against both sides of their identity, plus uniqueness."""

    def __init__(self):
        super().__init__(name=Suite.RECURRENCES.value)

    def tasks(self, config: ScanConfig) -> List[int]:
        return [config.identity_n_max]

    def run(self, task: int, config: ScanConfig) -> List[VerificationRecord]:
        records: List[VerificationRecord] = []
        for rec, sides in ((REC_B1, (LHS_B1, RHS_B1)), (REC_C1, (LHS_C1, RHS_C1))):
            for side in sides:
                records += check_recurrence(side, rec, task, self.name)
            records += check_uniqueness(sides[0], rec, task, self.name)
        self.log_step("recurrences", f"{len(records)} records up to n = {task}")
        self.report_failures(records)
        return records
