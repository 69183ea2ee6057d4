"""
Ordered fan-out of pure work items over worker processes.
"""

import logging
from multiprocessing import Pool
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def parallel_map(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Apply func to every item and return results in input order.

    With one worker (or a single item) everything runs in-process.
    func must be a module-level callable so it can be pickled.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]

    workers = min(workers, len(items))
    chunksize = max(1, len(items) // (workers * 4))
    logger.debug(f"Dispatching {len(items)} items to {workers} workers (chunksize={chunksize})")
    with Pool(workers) as pool:
        return pool.map(func, items, chunksize=chunksize)
