"""Store of all non-equivalence rules discovered during exploration."""

from __future__ import annotations

from typing import Iterator

from combseek.engine.rules import Rule


class RuleDB:
    def __init__(self):
        self._rules: dict[tuple, Rule] = {}

    def add(self, rule: Rule) -> bool:
        """Record a rule; returns False when it was already present."""
        if rule.is_equivalence():
            raise ValueError("equivalence rules belong in the EquivDB")
        key = rule.key()
        if key in self._rules:
            return False
        self._rules[key] = rule
        return True

    def __len__(self) -> int:
        return len(self._rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self._rules.values())
