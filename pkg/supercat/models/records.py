"""
Super Catalan Verifier - Verification Record Models
Outcome of a single check and the aggregated report.
"""
import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from supercat.models.scan import ScanConfig
from supercat.services.modular_core import reduce

SIGNED_DISPLAY_LIMIT = 10


def signed_form(value: str, modulus: Optional[int]) -> Optional[int]:
    """
    Least absolute representative of a residue string, when it reads better.

    Only negative representatives with magnitude at most
    ``SIGNED_DISPLAY_LIMIT`` are returned, so "4" mod 5 gives -1 while
    "2" mod 5, exact values and large residues give None.
    """
    if modulus is None:
        return None
    try:
        signed = reduce(int(value), modulus).signed
    except ValueError:
        return None
    if signed < 0 and -signed <= SIGNED_DISPLAY_LIMIT:
        return signed
    return None


class VerificationRecord(BaseModel):
    """
    Outcome of one check.

    ``index`` is the prime for congruence checks and n for identity checks;
    the remaining coordinates (i, j, k, x, e, weight) go into ``params``.
    ``modulus`` is None for exact checks over the integers or rationals.
    ``lhs``/``rhs`` hold canonical residues; ``lhs_signed``/``rhs_signed``
    carry the small negative form alongside, e.g. 4 and -1 mod 5.
    """
    suite: str
    equation: str
    index: int
    params: Dict[str, Any] = {}
    modulus: Optional[int] = None
    lhs: str
    rhs: str
    lhs_signed: Optional[int] = None
    rhs_signed: Optional[int] = None
    passed: bool
    asserted: bool = True  # informational records never fail a scan
    witness: Optional[Dict[str, Any]] = None

    @model_validator(mode="after")
    def _attach_derived(self) -> "VerificationRecord":
        if self.lhs_signed is None:
            self.lhs_signed = signed_form(self.lhs, self.modulus)
        if self.rhs_signed is None:
            self.rhs_signed = signed_form(self.rhs, self.modulus)
        if not self.passed and self.witness is None:
            self.witness = {
                "index": self.index,
                **self.params,
                "lhs": self.lhs,
                "rhs": self.rhs,
            }
        return self

    @property
    def failed(self) -> bool:
        return self.asserted and not self.passed

    def sort_key(self):
        return (self.suite, self.index)


class SuiteSummary(BaseModel):
    """Tally of records for one suite."""
    total: int = 0
    passed: int = 0
    failed: int = 0
    informational: int = 0

    def add(self, record: VerificationRecord) -> None:
        self.total += 1
        if not record.asserted:
            self.informational += 1
        elif record.passed:
            self.passed += 1
        else:
            self.failed += 1


class Report(BaseModel):
    """Finalized scan result."""
    config: ScanConfig
    records: List[VerificationRecord] = []
    summary: Dict[str, SuiteSummary] = {}
    totals: SuiteSummary = Field(default_factory=SuiteSummary)
    wall_time_seconds: float = 0.0

    @classmethod
    def assemble(
        cls,
        config: ScanConfig,
        records: List[VerificationRecord],
        wall_time_seconds: float = 0.0,
    ) -> "Report":
        """Sort records canonically and tally them per suite."""
        ordered = sorted(records, key=VerificationRecord.sort_key)
        summary: Dict[str, SuiteSummary] = {}
        totals = SuiteSummary()
        for record in ordered:
            summary.setdefault(record.suite, SuiteSummary()).add(record)
            totals.add(record)
        return cls(
            config=config,
            records=ordered,
            summary=dict(sorted(summary.items())),
            totals=totals,
            wall_time_seconds=wall_time_seconds,
        )

    @property
    def failures(self) -> List[VerificationRecord]:
        return [r for r in self.records if r.failed]

    @property
    def exit_code(self) -> int:
        """1 iff at least one asserted record failed."""
        return 1 if self.failures else 0

    def to_payload(self, include_wall_time: bool = True) -> Dict[str, Any]:
        payload = self.model_dump(mode="json")
        if not include_wall_time:
            payload.pop("wall_time_seconds")
        return payload

    def canonical_json(self) -> str:
        """JSON without the wall time; identical for identical configs."""
        return json.dumps(self.to_payload(include_wall_time=False), sort_keys=True, indent=2)
