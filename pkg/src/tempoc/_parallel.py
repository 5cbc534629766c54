"""Ordered parallel map used by the solver layers.

Results are collected by input position, so the reduction is deterministic
for any worker count. threads <= 1 avoids the executor entirely.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count(requested: int | None) -> int:
    if requested is not None:
        return max(1, int(requested))
    env = os.environ.get("TEMPOC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def map_ordered(fn, items, threads: int):
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))
