"""Work-unit instrumentation.

Hot loops report how many adjacency / string entries they touch.  Counting is
off unless a :func:`counting` block is active, so the cost outside tests is a
single attribute check per call site.
"""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from typing import Iterator

_active: list[Counter] = []


def add(kind: str, k: int = 1) -> None:
    if _active:
        for c in _active:
            c[kind] += k


@contextmanager
def counting() -> Iterator[Counter]:
    """Collect work units by kind for the duration of the block."""
    c: Counter = Counter()
    _active.append(c)
    try:
        yield c
    finally:
        _active.remove(c)
