"""Batch orchestration for independent solver instances."""

from __future__ import annotations

import concurrent.futures
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def run_batch(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    on_result: Callable[[int, R], None] | None = None,
) -> list[R]:
    """Apply ``fn`` to every item and return the results in input order.

    With ``workers`` > 1 the items are spread over a process pool; ``fn``
    must then be a module-level function and its arguments picklable.
    ``on_result`` is called as each result arrives (completion order), which
    is what the verbose progress lines hang off.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        results = []
        for i, item in enumerate(items):
            result = fn(item)
            if on_result is not None:
                on_result(i, result)
            results.append(result)
        return results

    results: list = [None] * len(items)
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(fn, item): i for i, item in enumerate(items)}
        for future in concurrent.futures.as_completed(futures):
            i = futures[future]
            results[i] = future.result()
            if on_result is not None:
                on_result(i, results[i])
    return results
