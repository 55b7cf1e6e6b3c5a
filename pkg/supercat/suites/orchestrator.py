"""
Super Catalan Verifier - Scan Orchestrator
Fans suite tasks out to a worker pool and assembles the report.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Tuple

from supercat.models.records import Report, VerificationRecord
from supercat.models.scan import ScanConfig, Suite
from supercat.services.exact_core import prepare_pascal_cache
from supercat.suites.base import BaseSuite
from supercat.suites.congruence_suite import SELF_TEST_SUITE, CongruenceSuite, SelfTestSuite
from supercat.suites.identity_engine import IdentitySuite, RecurrenceSuite

logger = logging.getLogger(__name__)

Task = Tuple[str, int, ScanConfig]

_suites: Dict[str, BaseSuite] = {}


def build_suite(name: str) -> BaseSuite:
    """Get or create the suite registered under ``name``."""
    if name not in _suites:
        if name == SELF_TEST_SUITE:
            _suites[name] = SelfTestSuite()
        else:
            suite = Suite(name)
            if suite in (Suite.IDENTITY_B1, Suite.IDENTITY_C1):
                _suites[name] = IdentitySuite(suite)
            elif suite == Suite.RECURRENCES:
                _suites[name] = RecurrenceSuite()
            else:
                _suites[name] = CongruenceSuite(suite)
    return _suites[name]


def _run_task(task: Task) -> List[VerificationRecord]:
    # top-level so worker processes can unpickle it
    name, key, config = task
    return build_suite(name).run(key, config)


def plan_tasks(config: ScanConfig) -> List[Task]:
    """All (suite, key) tasks for a config, in canonical order."""
    names = [suite.value for suite in config.suites]
    if config.self_test:
        names.append(SELF_TEST_SUITE)
    return [
        (name, key, config)
        for name in names
        for key in build_suite(name).tasks(config)
    ]


def run_scan(config: ScanConfig) -> Report:
    """
    Execute the selected suites and return the finalized report.

    Record order depends only on the config: tasks are planned in canonical
    order, results are merged in task order, and the report sorts by suite
    and index.
    """
    started = time.perf_counter()
    tasks = plan_tasks(config)
    logger.info(
        f"🚀 Scan started: {len(tasks)} tasks, primes {config.prime_min}..{config.prime_max}, "
        f"{config.parallelism} worker(s)"
    )

    records: List[VerificationRecord] = []
    if config.parallelism == 1 or len(tasks) <= 1:
        prepare_pascal_cache(config.prime_max)
        for task in tasks:
            records.extend(_run_task(task))
    else:
        with ProcessPoolExecutor(
            max_workers=config.parallelism,
            initializer=prepare_pascal_cache,
            initargs=(config.prime_max,),
        ) as pool:
            for batch in pool.map(_run_task, tasks):
                records.extend(batch)

    report = Report.assemble(config, records, time.perf_counter() - started)
    logger.info(
        f"✅ Scan finished: {report.totals.total} records, {report.totals.failed} failed "
        f"in {report.wall_time_seconds:.2f}s"
    )
    return report
