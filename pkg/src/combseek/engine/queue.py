"""The three-queue schedule that drives exploration.

New labels wait in the working queue and are dequeued once for the
inferral/initial phase. Labels that survive move to the next queue; when the
current queue drains, the next queue is promoted and each label in it is
dequeued once per expansion subset, in order, before being retired. All
queues are FIFO, so scheduling is deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Union

INITIAL = "initial"


class Exhausted(Exception):
    """No label remains to be scheduled."""


Phase = Union[str, tuple[str, int]]


class ExplorationQueue:
    def __init__(self, expansion_subsets: int):
        if expansion_subsets < 0:
            raise ValueError("number of expansion subsets must be >= 0")
        self._k = expansion_subsets
        self._working: deque[int] = deque()
        self._current: deque[int] = deque()
        self._next: deque[int] = deque()
        self._seen: set[int] = set()
        self._retired: set[int] = set()
        self._subset_index: dict[int, int] = {}

    def add(self, label: int) -> None:
        if label not in self._seen:
            self._seen.add(label)
            self._working.append(label)

    def retire(self, label: int) -> None:
        """Drop a label from all future scheduling (inferral hit, verified)."""
        self._retired.add(label)

    def next(self) -> tuple[int, Phase]:
        """The next (label, phase) to process; raises Exhausted when drained."""
        while True:
            while self._working:
                label = self._working.popleft()
                if label in self._retired:
                    continue
                if self._k > 0:
                    self._next.append(label)
                return (label, INITIAL)
            while self._current:
                label = self._current.popleft()
                if label in self._retired:
                    continue
                i = self._subset_index.get(label, 0)
                self._subset_index[label] = i + 1
                if i + 1 < self._k:
                    self._current.append(label)
                return (label, ("expansion", i))
            if self._next:
                self._current = self._next
                self._next = deque()
                continue
            raise Exhausted
