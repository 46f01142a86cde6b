# File: avfusion/utils/worker_pool.py
# 🧵 Bounded Worker Pool for per-clip work

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional

import structlog

log = structlog.get_logger(__name__)


@dataclass
class TaskResult:
    """Outcome of one item processed by the pool."""

    item: Any
    value: Any = None
    error: Optional[BaseException] = None

    @property
    def ok(self):
        return self.error is None


def _run(fn, item):
    try:
        return TaskResult(item=item, value=fn(item))
    except Exception as e:  # noqa: BLE001
        return TaskResult(item=item, error=e)


def map_bounded(fn: Callable[[Any], Any], items: Iterable[Any], jobs: int = 1) -> List[TaskResult]:
    """Apply fn to every item with at most `jobs` workers; results keep input order."""
    items = list(items)
    jobs = max(1, int(jobs or 1))
    if jobs == 1 or len(items) <= 1:
        results = [_run(fn, item) for item in items]
    else:
        with ThreadPoolExecutor(max_workers=jobs, thread_name_prefix='avfusion') as pool:
            results = list(pool.map(lambda item: _run(fn, item), items))

    failed = sum(1 for r in results if not r.ok)
    log.debug('pool_complete', items=len(items), failed=failed, jobs=jobs)
    return results
