"""Run registered suites and collect their reports."""

import logging
import time
from typing import Any, Dict, List, Optional

from src.config import Configuration
from src.schemas import SuiteReport
from src.utils.decorators import log_io
from src.verify.context import SuiteContext
from src.verify.registry import get_suite, suite_names

logger = logging.getLogger(__name__)


@log_io
def run_suite(
    name: str,
    config: Optional[Configuration] = None,
    params: Optional[Dict[str, Any]] = None,
) -> SuiteReport:
    """Run one suite.

    Args:
        name: Registered suite name.
        config: Base configuration; defaults apply when omitted.
        params: Per-run overrides of configuration fields, such as ``seed`` or
            ``random_cases``.

    Returns:
        SuiteReport: Case count, failures and covered ranges. A failing case is
        reported, never raised.

    Raises:
        UnknownSuite: If ``name`` is not registered.
        ConfigError: If ``params`` names an unknown field.
        TooLarge: If an enumeration inside the suite exceeds its guard.
    """
    suite = get_suite(name)
    config = (config or Configuration()).with_overrides(params)
    ctx = SuiteContext(config=config)

    logger.info(f"Running suite {name}: {suite.description}")
    start = time.perf_counter()
    suite.run(ctx)
    elapsed = time.perf_counter() - start

    report = SuiteReport(
        suite=name,
        params=ctx.params(),
        cases=ctx.cases,
        failures=ctx.failures,
        ranges=ctx.ranges,
        wall_time=round(elapsed, 3),
    )
    if report.passed:
        logger.info(f"Suite {name} passed {report.cases} cases in {elapsed:.2f}s")
    else:
        logger.warning(
            f"Suite {name} failed {len(report.failures)} of {report.cases} cases"
        )
    return report


def run_all(
    config: Optional[Configuration] = None, params: Optional[Dict[str, Any]] = None
) -> List[SuiteReport]:
    """Run every registered suite in registration order."""
    return [run_suite(name, config, params) for name in suite_names()]
