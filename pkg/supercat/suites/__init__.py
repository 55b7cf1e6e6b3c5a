"""
Super Catalan Verifier - Suites Package
"""
from .base import BaseSuite
from .congruence_suite import CongruenceSuite, SelfTestSuite
from .identity_engine import IdentitySuite, RecurrenceSuite
from .orchestrator import build_suite, run_scan

__all__ = [
    "BaseSuite",
    "CongruenceSuite",
    "SelfTestSuite",
    "IdentitySuite",
    "RecurrenceSuite",
    "build_suite",
    "run_scan",
]
