"""Order-preserving map with optional process workers.

Range sweeps partition per prime; results merge by input order, so the output
is byte-identical regardless of worker count.
"""

from __future__ import annotations

import os
from multiprocessing import get_context
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_MIN_PARALLEL_ITEMS = 8


def default_workers() -> int:
    """Worker count from STRAUS_WORKERS, else the available parallelism."""
    env = os.environ.get("STRAUS_WORKERS", "").strip()
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def pmap(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """list(map(fn, items)), forked across workers when it pays off."""
    if workers <= 1 or len(items) < _MIN_PARALLEL_ITEMS:
        return [fn(item) for item in items]
    chunksize = max(1, len(items) // (workers * 8))
    with get_context("fork").Pool(workers) as pool:
        return pool.map(fn, items, chunksize=chunksize)
