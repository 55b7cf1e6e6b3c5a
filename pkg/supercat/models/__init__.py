"""
Super Catalan Verifier - Data Models Package
"""
from .scan import (
    OutputFormat,
    ScanConfig,
    Suite,
    parse_prime_range,
    parse_suites,
)
from .records import (
    Report,
    SuiteSummary,
    VerificationRecord,
)

__all__ = [
    "OutputFormat",
    "ScanConfig",
    "Suite",
    "parse_prime_range",
    "parse_suites",
    "Report",
    "SuiteSummary",
    "VerificationRecord",
]
