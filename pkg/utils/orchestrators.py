# utils/orchestrators.py
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from .logger_config import logger

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: int = None) -> int:
    """None defers to CEVIAN_WORKERS; 0 or less means one worker per CPU."""
    if workers is None:
        from .environment import default_workers
        workers = default_workers()
    if workers <= 0:
        workers = os.cpu_count() or 1
    return workers


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = None,
                chunksize: int = None) -> List[R]:
    """
    Apply func to every item, in parallel when workers > 1.

    Results come back in input order, so the output is identical to a serial
    run however the work is partitioned. func must be a picklable
    module-level callable.
    """
    items = list(items)
    workers = min(resolve_workers(workers), max(len(items), 1))
    start_time = time.perf_counter()

    if workers == 1:
        results = [func(item) for item in items]
    else:
        chunksize = chunksize or max(1, len(items) // (workers * 4))
        logger.debug(f"Dispatching {len(items)} tasks to {workers} workers (chunksize {chunksize})")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(func, items, chunksize=chunksize))

    logger.debug(
        f"ordered_map {getattr(func, '__name__', func)} over {len(items)} items "
        f"with {workers} worker(s) in {time.perf_counter() - start_time:.3f}s")
    return results
