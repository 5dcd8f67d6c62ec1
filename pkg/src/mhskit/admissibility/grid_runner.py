"""
Grid Runner Module

Evaluates the rows of a probe grid through an executor and merges the results
in row order.
"""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Awaitable, Callable, List, Optional, Sequence

logger = logging.getLogger(__name__)


class GridRunner:
    """
    Runs a row function over grid rows with a fixed number of workers.

    Results come back in the order of the rows whatever the completion order,
    so reports do not depend on the worker count.
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError(f"Worker count must be positive, got {workers}")
        self.workers = workers

    async def _execute(self, executor: ThreadPoolExecutor, function: Callable[[Any], Any], row: Any) -> Any:
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(executor, function, row)

    async def run_async(self, function: Callable[[Any], Any], rows: Sequence[Any]) -> List[Any]:
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            tasks: List[Awaitable[Any]] = [self._execute(executor, function, row) for row in rows]
            return list(await asyncio.gather(*tasks))

    def run(self, function: Callable[[Any], Any], rows: Sequence[Any]) -> List[Any]:
        """
        Evaluate function on every row.

        Raises:
            RuntimeError: If called from inside a running event loop
        """
        logger.debug("running %d grid rows on %d workers", len(rows), self.workers)
        if self.workers == 1:
            return [function(row) for row in rows]
        return asyncio.run(self.run_async(function, rows))


def run_rows(function: Callable[[Any], Any], rows: Sequence[Any], workers: Optional[int] = None) -> List[Any]:
    return GridRunner(workers or 1).run(function, rows)
