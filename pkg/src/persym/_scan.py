"""Chunked exhaustive scans with additive histogram merge."""

from __future__ import annotations

import logging
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from .errors import BudgetError

log = logging.getLogger("persym")

DEFAULT_BUDGET_BITS = 30
BUDGET_ENV = "PERSYM_BUDGET_BITS"
WARN_BITS = 25
PROGRESS_MIN_ITEMS = 1 << 22
DEFAULT_CHUNK = 1 << 22


def resolve_budget(budget_bits: int | None = None) -> int:
    """Explicit value, else $PERSYM_BUDGET_BITS, else 30."""
    if budget_bits is not None:
        return int(budget_bits)
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BUDGET_BITS


def check_budget(needed: int, budget_bits: int | None, what: str = "enumeration") -> None:
    budget = resolve_budget(budget_bits)
    if needed > budget:
        raise BudgetError(needed, budget, what)
    if needed > WARN_BITS:
        log.warning("%s over 2^%d items; this may take a while", what, needed)


def chunk_bounds(total: int, chunks: int | None = None, chunk_size: int = DEFAULT_CHUNK) -> list[tuple[int, int]]:
    if chunks is None:
        chunks = max(1, -(-total // chunk_size))
    chunks = max(1, min(chunks, total)) if total else 1
    edges = [total * c // chunks for c in range(chunks + 1)]
    return [(a, b) for a, b in zip(edges, edges[1:])]


def run_scan(
    kernel: Callable[[int, int], np.ndarray],
    total: int,
    *,
    threads: int = 1,
    chunks: int | None = None,
    progress: bool = False,
    label: str = "scan",
) -> list[int]:
    """Apply ``kernel(start, stop)`` over [0, total) and add the histograms.

    The merge is an exact integer sum in chunk order, so the result does not
    depend on ``threads`` or ``chunks``.
    """
    bounds = chunk_bounds(total, chunks)
    report = progress and total > PROGRESS_MIN_ITEMS
    acc: list[int] | None = None
    done = 0
    t0 = last = time.monotonic()
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        for (a, b), hist in zip(bounds, pool.map(lambda ab: kernel(*ab), bounds)):
            part = [int(v) for v in hist]
            if acc is None:
                acc = part
            else:
                acc = [x + y for x, y in zip(acc, part)]
            done += b - a
            now = time.monotonic()
            if report and now - last >= 1.0:
                print(f"[{label}] {done}/{total} ({100 * done / total:.1f}%) "
                      f"{now - t0:.1f}s", file=sys.stderr, flush=True)
                last = now
    return acc if acc is not None else []
