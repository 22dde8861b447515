"""Finding specifications inside a universe of rules.

``prune_to_spec_union`` deletes, to a fixpoint, every rule with a child that
is no surviving rule's parent. What remains is exactly the union of all
specifications contained in the input. ``extract_specification`` then reads
one specification out of that union by breadth-first traversal from the
root, breaking ties deterministically.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

from combseek.engine.rules import Rule, Specification


class RootNotInUnion(ValueError):
    """The root is not the parent of any rule in the pruned universe."""


def prune_to_spec_union(rules: Iterable[Rule]) -> set[Rule]:
    """The union of all specifications contained in ``rules``.

    Worklist formulation of the repeated-deletion fixpoint: a label with no
    defining rule kills every rule that uses it as a child, which may leave
    further labels undefined.
    """
    alive = set(rules)
    definers: dict[int, set[Rule]] = {}
    users: dict[int, set[Rule]] = {}
    for rule in alive:
        definers.setdefault(rule.parent, set()).add(rule)
        for child in rule.children:
            users.setdefault(child, set()).add(rule)

    undefined = deque(label for label in users if not definers.get(label))
    dead_labels = set(undefined)
    while undefined:
        label = undefined.popleft()
        for rule in users.get(label, ()):
            if rule not in alive:
                continue
            alive.discard(rule)
            parent_rules = definers[rule.parent]
            parent_rules.discard(rule)
            if not parent_rules and rule.parent in users and rule.parent not in dead_labels:
                dead_labels.add(rule.parent)
                undefined.append(rule.parent)
    return alive


def extract_specification(
    pruned: Iterable[Rule],
    root: int,
    encodings: Mapping[int, str] | None = None,
) -> Specification:
    """One specification for ``root`` from a pruned universe.

    For each class reached, the rule with the smallest
    (parent, children, strategy name) key is chosen, making extraction
    reproducible across runs.
    """
    by_parent: dict[int, list[Rule]] = {}
    for rule in pruned:
        by_parent.setdefault(rule.parent, []).append(rule)
    if root not in by_parent:
        raise RootNotInUnion(f"label {root} is not defined in the pruned universe")

    chosen: dict[int, Rule] = {}
    queue = deque([root])
    seen = {root}
    while queue:
        label = queue.popleft()
        rule = min(by_parent[label], key=Rule.key)
        chosen[label] = rule
        for child in rule.children:
            if child not in seen:
                seen.add(child)
                queue.append(child)

    encs = None
    if encodings is not None:
        encs = {label: encodings[label] for label in chosen if label in encodings}
    return Specification(root, chosen, encs)
