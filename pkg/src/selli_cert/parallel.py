"""Deterministic work partitioning.

Enumeration work is split into fixed-size chunks whose boundaries depend
only on the problem size, never on the worker count; chunk results are
combined in chunk order with exact integer arithmetic.  Output is therefore
bitwise identical for any number of threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

__all__ = ["resolve_threads", "map_chunks", "chunk_ranges"]

_ENV_VAR = "SELLI_CERT_THREADS"


def resolve_threads(requested: int | None) -> int:
    """Explicit value wins; else the SELLI_CERT_THREADS env var; else 1."""
    if requested is not None:
        if requested < 1:
            raise ValueError("thread count must be >= 1")
        return requested
    env = os.environ.get(_ENV_VAR)
    if env:
        n = int(env)
        if n < 1:
            raise ValueError(f"{_ENV_VAR} must be >= 1")
        return n
    return 1


def chunk_ranges(total: int, chunk_size: int = 4096) -> list[tuple[int, int]]:
    """[start, stop) ranges of fixed size covering range(total)."""
    return [(lo, min(lo + chunk_size, total)) for lo in range(0, total, chunk_size)]


def map_chunks(fn, items, threads: int) -> list:
    """Apply fn to each item, preserving input order in the result list."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
