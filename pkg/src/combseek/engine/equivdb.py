"""Union-find over class labels, keeping the witnessing equivalence rules.

Plain union-find forgets why two labels were merged; here every union also
records the rule as a labeled edge so a chain of equivalence rules between
any two merged labels can be reconstructed.
"""

from __future__ import annotations

from collections import deque

from combseek.engine.rules import Rule


class NotEquivalent(ValueError):
    """Raised when asked for a path between labels in different classes."""


class EquivDB:
    def __init__(self):
        self._parent: dict[int, int] = {}
        self._size: dict[int, int] = {}
        self._min: dict[int, int] = {}
        self._edges: dict[int, list[tuple[int, Rule]]] = {}

    def _ensure(self, a: int) -> None:
        if a not in self._parent:
            self._parent[a] = a
            self._size[a] = 1
            self._min[a] = a
            self._edges[a] = []

    def _root(self, a: int) -> int:
        self._ensure(a)
        while self._parent[a] != a:
            self._parent[a] = self._parent[self._parent[a]]
            a = self._parent[a]
        return a

    def find(self, a: int) -> int:
        """Representative label: the smallest label in a's class."""
        return self._min[self._root(a)]

    def union(self, a: int, b: int, via: Rule) -> None:
        """Merge the classes of a and b, witnessed by an equivalence rule."""
        if not via.is_equivalence():
            raise ValueError("union requires an equivalence-kernel rule")
        self._ensure(a)
        self._ensure(b)
        self._edges[a].append((b, via))
        self._edges[b].append((a, via))
        ra, rb = self._root(a), self._root(b)
        if ra == rb:
            return
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        self._min[ra] = min(self._min[ra], self._min[rb])

    def equivalent(self, a: int, b: int) -> bool:
        return self._root(a) == self._root(b)

    def path(self, a: int, b: int) -> list[Rule]:
        """Shortest chain of equivalence rules connecting a to b."""
        self._ensure(a)
        self._ensure(b)
        if self._root(a) != self._root(b):
            raise NotEquivalent(f"{a} and {b} are not equivalent")
        if a == b:
            return []
        prev: dict[int, tuple[int, Rule]] = {}
        queue = deque([a])
        seen = {a}
        while queue:
            cur = queue.popleft()
            for nxt, rule in self._edges[cur]:
                if nxt in seen:
                    continue
                prev[nxt] = (cur, rule)
                if nxt == b:
                    chain = []
                    node = b
                    while node != a:
                        node, rule = prev[node]
                        chain.append(rule)
                    chain.reverse()
                    return chain
                seen.add(nxt)
                queue.append(nxt)
        raise NotEquivalent(f"{a} and {b} are not equivalent")  # pragma: no cover

    def class_of(self, a: int) -> list[int]:
        root = self._root(a)
        return sorted(l for l in self._parent if self._root(l) == root)
