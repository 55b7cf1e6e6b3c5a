"""
Super Catalan Verifier - Scan Configuration Models
"""
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ValidationError, field_validator, model_validator

from supercat.config import Settings
from supercat.exceptions import InvalidScanConfig

PRIME_CEILING = 10 ** 4
IDENTITY_N_CEILING = 200


class Suite(str, Enum):
    """Selectable verification suites, in canonical order."""
    THM11 = "thm11"
    THM12 = "thm12"
    CONJ14 = "conj14"
    SPLIT = "split"
    LEMMAS = "lemmas"
    MT = "mt"
    SUN_TAURASO = "sun_tauraso"
    IDENTITY_B1 = "identity_b1"
    IDENTITY_C1 = "identity_c1"
    RECURRENCES = "recurrences"


class OutputFormat(str, Enum):
    """Report renderings."""
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


def parse_prime_range(text: str) -> Tuple[int, int]:
    """Parse ``MIN..MAX`` (a single number means MIN = MAX)."""
    low, sep, high = text.strip().partition("..")
    try:
        if not sep:
            value = int(low)
            return value, value
        return int(low), int(high)
    except ValueError as exc:
        raise InvalidScanConfig(f"prime range must look like MIN..MAX, got {text!r}") from exc


def parse_suites(text: str) -> List["Suite"]:
    """Parse a comma separated suite list; ``all`` selects every suite."""
    names = [name.strip().lower() for name in text.split(",") if name.strip()]
    if names == ["all"]:
        return list(Suite)
    try:
        return [Suite(name) for name in names]
    except ValueError as exc:
        known = ", ".join(s.value for s in Suite)
        raise InvalidScanConfig(f"unknown suite in {text!r}; choose from: {known}, all") from exc


class ScanConfig(BaseModel):
    """Everything a scan needs; echoed verbatim into the report."""
    prime_min: int = 3
    prime_max: int = 300
    suites: List[Suite] = list(Suite)
    identity_n_max: int = 60
    inner_sum_n_max: int = 40
    lemma_prime_max: int = 100
    pointwise_prime_max: int = 60
    mt_square_prime_max: int = 97
    parallelism: int = 1
    output_format: OutputFormat = OutputFormat.JSON
    output_path: Optional[str] = None
    self_test: bool = False

    @field_validator("suites")
    @classmethod
    def _canonical_suites(cls, value: Iterable[Suite]) -> List[Suite]:
        chosen = set(value)
        return [suite for suite in Suite if suite in chosen]

    @model_validator(mode="after")
    def _check_bounds(self) -> "ScanConfig":
        if not 3 <= self.prime_min <= self.prime_max <= PRIME_CEILING:
            raise ValueError(
                f"need 3 <= prime_min <= prime_max <= {PRIME_CEILING}, "
                f"got {self.prime_min}..{self.prime_max}"
            )
        if not 0 <= self.identity_n_max <= IDENTITY_N_CEILING:
            raise ValueError(f"identity_n_max must be in [0, {IDENTITY_N_CEILING}]")
        if self.inner_sum_n_max < 0:
            raise ValueError("inner_sum_n_max must be non-negative")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        return self

    @classmethod
    def build(cls, **fields) -> "ScanConfig":
        """Construct, turning validation problems into InvalidScanConfig."""
        try:
            return cls(**fields)
        except ValidationError as exc:
            raise InvalidScanConfig(str(exc)) from exc

    @classmethod
    def from_settings(cls, settings: Settings, **overrides) -> "ScanConfig":
        """Defaults from SUPERCAT_* settings, then explicit overrides."""
        prime_min, prime_max = parse_prime_range(settings.PRIMES)
        fields = {
            "prime_min": prime_min,
            "prime_max": prime_max,
            "suites": parse_suites(settings.SUITES),
            "identity_n_max": settings.N_MAX,
            "inner_sum_n_max": settings.INNER_SUM_N_MAX,
            "lemma_prime_max": settings.LEMMA_PRIME_MAX,
            "pointwise_prime_max": settings.POINTWISE_PRIME_MAX,
            "mt_square_prime_max": settings.MT_SQUARE_PRIME_MAX,
            "parallelism": settings.JOBS,
            "output_path": settings.OUT,
            "self_test": settings.SELF_TEST,
        }
        if settings.FORMAT:
            fields["output_format"] = settings.FORMAT
        fields.update({k: v for k, v in overrides.items() if v is not None})
        return cls.build(**fields)
