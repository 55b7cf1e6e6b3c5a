"""
Super Catalan Verifier - Base Suite Class
All verification suites inherit from this base class.
"""
from abc import ABC, abstractmethod
from datetime import datetime
from typing import List
import logging

from supercat.models.records import VerificationRecord
from supercat.models.scan import ScanConfig

logger = logging.getLogger(__name__)


class BaseSuite(ABC):
    """
    Base class for all verification suites.

    A suite splits its work into independent tasks (usually one per prime,
    or one per identity window) so the orchestrator can fan them out to a
    worker pool. Tasks must only depend on the task key and the config.
    """

    def __init__(self, name: str):
        self.name = name
        self.created_at = datetime.now()
        logger.info(f"🧮 Suite initialized: {self.name}")

    @abstractmethod
    def tasks(self, config: ScanConfig) -> List[int]:
        """Task keys for this config, in the order they should be reported."""

    @abstractmethod
    def run(self, task: int, config: ScanConfig) -> List[VerificationRecord]:
        """Execute one task and return its records."""

    def log_step(self, step: str, detail: str) -> None:
        """Log a verification step."""
        logger.debug(f"[{self.name}] {step}: {detail}")

    def report_failures(self, records: List[VerificationRecord]) -> None:
        for record in records:
            if record.failed:
                logger.warning(
                    f"[{self.name}] ❌ {record.equation} failed at {record.index}: "
                    f"{record.witness}"
                )

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}(name='{self.name}')>"
