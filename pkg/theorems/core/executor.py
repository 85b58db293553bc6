import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from combinatorics.errors import SpechtError

from .models import GridFailure, GridReport

logger = logging.getLogger(__name__)

# A grid check returns None on success or a message describing the disagreement.
GridCheck = Callable[..., Optional[str]]


class GridExecutor:
    """Runs a check over a parameter grid, optionally on a thread pool, in grid order"""

    def __init__(self, max_workers: int = 1):
        """
        Args:
            max_workers: worker threads; 1 runs in the calling thread
        """
        self.max_workers = max(1, max_workers)

    def _run_case(self, check: GridCheck, params: Dict[str, int]) -> Tuple[str, Optional[str]]:
        try:
            message = check(**params)
        except SpechtError as e:
            return "error", f"{type(e).__name__}: {e}"
        return ("failed", message) if message else ("passed", None)

    def map(self, check: GridCheck, grid: Iterable[Dict[str, int]]) -> List[Tuple[Dict[str, int], str, Optional[str]]]:
        cases = list(grid)
        if self.max_workers == 1 or len(cases) < 2:
            outcomes = [self._run_case(check, params) for params in cases]
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                outcomes = list(pool.map(lambda params: self._run_case(check, params), cases))
        return [(params, status, message) for params, (status, message) in zip(cases, outcomes)]

    def run(self, name: str, check: GridCheck, grid: Iterable[Dict[str, int]]) -> GridReport:
        """
        Evaluate check(**params) on every grid point.

        Args:
            name: report name
            check: returns None when the case agrees, else a message
            grid: parameter dictionaries

        Returns:
            GridReport: counts, failures and cases that raised
        """
        start_time = time.time()
        report = GridReport(name=name)
        logger.info(f"starting grid '{name}' with {self.max_workers} worker(s)")

        for params, status, message in self.map(check, grid):
            report.total += 1
            if status == "passed":
                report.passed += 1
            elif status == "failed":
                report.failures.append(GridFailure(parameters=params, message=message))
            else:
                report.errors.append(GridFailure(parameters=params, message=message))

        report.elapsed = time.time() - start_time
        if report.ok:
            logger.info(f"grid '{name}': {report.passed}/{report.total} passed ({report.elapsed:.2f}s)")
        else:
            logger.warning(
                f"grid '{name}': {len(report.failures)} mismatches, {len(report.errors)} errors "
                f"out of {report.total}"
            )
        return report
