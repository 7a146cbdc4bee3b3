"""Budgets, worker pools and deterministic reductions.

Enumeration ranges are cut into blocks of a fixed size that does not depend
on the worker count, so every block is computed identically no matter how
many threads run; reductions walk the blocks in index order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

from .core import BudgetExceeded

DEFAULT_BUDGET = 1 << 28
BUDGET_ENV = "RADCHAOS_BUDGET"

# relative tolerance under which two objective values count as tied
TIE_RTOL = 1e-12

T = TypeVar("T")
R = TypeVar("R")


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        return int(raw, 0)
    return DEFAULT_BUDGET


def default_workers() -> int:
    return os.cpu_count() or 1


def check_budget(needed: int, budget: int | None) -> None:
    cap = default_budget() if budget is None else budget
    if needed > cap:
        raise BudgetExceeded(needed, cap)


def blocks(total: int, size: int) -> list[tuple[int, int]]:
    return [(s, min(s + size, total)) for s in range(0, total, size)]


def pmap(fn: Callable[[T], R], items: Sequence[T], workers: int | None = 1) -> list[R]:
    """Ordered map; runs on a thread pool when workers > 1."""
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as ex:
        return list(ex.map(fn, items))


def beats(value: float, mask: int, best: float, best_mask: int) -> bool:
    """Max-reduction order: larger value wins, near-ties go to the smaller mask."""
    tol = TIE_RTOL * max(abs(value), abs(best))
    if value > best + tol:
        return True
    return value >= best - tol and mask < best_mask


def reduce_max(results: Iterable[tuple[float, int]]) -> tuple[float, int]:
    best, best_mask = float("-inf"), -1
    for value, mask in results:
        if best_mask < 0 or beats(value, mask, best, best_mask):
            best, best_mask = value, mask
    return best, best_mask


def reduce_min(results: Iterable[tuple[float, int]]) -> tuple[float, int]:
    best, best_mask = float("inf"), -1
    for value, mask in results:
        if best_mask < 0 or beats(-value, mask, -best, best_mask):
            best, best_mask = value, mask
    return best, best_mask
