"""Deterministic fan-out over an indexed work list.

Workers are forked so they inherit the frozen corpus/rule state by
reference; results are reassembled in chunk order, which keeps every
downstream artifact independent of scheduling.
"""

from __future__ import annotations

import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, TypeVar

T = TypeVar("T")

_ACTIVE_FN: Callable[[int], object] | None = None


def _run_span(span: tuple[int, int]) -> list[object]:
    assert _ACTIVE_FN is not None
    return [_ACTIVE_FN(i) for i in range(*span)]


def indexed_map(fn: Callable[[int], T], count: int, workers: int) -> list[T]:
    """Apply fn to 0..count-1, in order, optionally across forked workers."""
    if count == 0:
        return []
    if workers <= 1 or count == 1:
        return [fn(i) for i in range(count)]

    global _ACTIVE_FN
    chunk = max(1, (count + workers * 4 - 1) // (workers * 4))
    spans = [(lo, min(lo + chunk, count)) for lo in range(0, count, chunk)]
    _ACTIVE_FN = fn
    try:
        with ProcessPoolExecutor(
            max_workers=workers, mp_context=mp.get_context("fork")
        ) as pool:
            out: list[T] = []
            for part in pool.map(_run_span, spans):
                out.extend(part)  # type: ignore[arg-type]
            return out
    finally:
        _ACTIVE_FN = None
