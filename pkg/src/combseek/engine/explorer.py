"""The exploration loop: apply strategies, record rules, detect specifications.

The engine is domain-agnostic. A domain supplies canonical classes (hashable,
with a text ``encode()``) and a :class:`StrategyPack` of strategy callables;
the engine labels classes, schedules them through the three-queue lifecycle,
routes equivalence rules to the union-find and all other rules to the rule
store, and periodically searches the accumulated universe for a
specification.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Generic, Iterable, Optional, TypeVar

from combseek.engine.classdb import ClassDB
from combseek.engine.equivdb import EquivDB
from combseek.engine.kernels import Equivalence, Kernel, Verified
from combseek.engine.pruning import extract_specification, prune_to_spec_union
from combseek.engine.queue import INITIAL, Exhausted, ExplorationQueue
from combseek.engine.ruledb import RuleDB
from combseek.engine.rules import Rule, Specification

C = TypeVar("C")


@dataclass(frozen=True)
class Candidate:
    """One strategy application: named children plus the counting kernel.

    Children are raw domain classes; the engine canonicalizes them before
    labeling.
    """

    name: str
    children: tuple
    kernel: Kernel


@dataclass
class StrategyPack(Generic[C]):
    """Strategies grouped by the phase in which the engine applies them.

    - inferral: class -> Candidate | None; equivalence simplifications that,
      when they apply, retire the parent in favor of the child.
    - initial: class -> iterable of Candidate; run once, right after inferral.
    - expansion: ordered subsets S_1..S_k, each a list of
      class -> iterable of Candidate; one subset per current-queue pass.
    - verification: class -> (name, Verified) | None; tried once per class,
      at first labeling.
    """

    name: str
    canonicalize: Callable[[C], C]
    inferral: list = field(default_factory=list)
    initial: list = field(default_factory=list)
    expansion: list = field(default_factory=list)
    verification: list = field(default_factory=list)


@dataclass
class ExplorationStatus:
    classes_seen: int = 0
    rules_found: int = 0
    expansions_performed: int = 0
    spec_found: bool = False
    exhausted: bool = False


@dataclass
class ExplorationAudit:
    """Trace of applications for after-the-fact oracle checking."""

    canonicalizations: list = field(default_factory=list)  # (before, after)
    equivalences: list = field(default_factory=list)  # (name, parent, raw child)
    rules: list = field(default_factory=list)  # (name, parent, children, kernel)


class Explorer(Generic[C]):
    def __init__(
        self,
        root: C,
        pack: StrategyPack[C],
        max_expansions: int = 200_000,
        max_seconds: float = 300.0,
        spec_check_interval: int = 1000,
        classdb_compress: bool = False,
        audit: Optional[ExplorationAudit] = None,
    ):
        self.pack = pack
        self.classdb: ClassDB = ClassDB(compress=classdb_compress)
        self.equivdb = EquivDB()
        self.ruledb = RuleDB()
        self.queue = ExplorationQueue(len(pack.expansion))
        self.status = ExplorationStatus()
        self.specification: Specification | None = None
        self.max_expansions = max_expansions
        self.max_seconds = max_seconds
        self.spec_check_interval = spec_check_interval
        self.audit = audit
        self._equiv_seen: set[tuple] = set()
        self._rules_since_check = 0
        self.root_label = self._label(pack.canonicalize(root))

    # -- labeling ---------------------------------------------------------------

    def _label(self, cls: C) -> int:
        before = len(self.classdb)
        label = self.classdb.add(cls)
        if len(self.classdb) > before:
            self.status.classes_seen += 1
            verified = self._try_verify(label, cls)
            if not verified:
                self.queue.add(label)
        return label

    def _try_verify(self, label: int, cls: C) -> bool:
        for strategy in self.pack.verification:
            result = strategy(cls)
            if result is not None:
                name, kernel = result
                if self.ruledb.add(Rule(label, (), name, kernel)):
                    self.status.rules_found += 1
                    self._rules_since_check += 1
                if self.audit is not None:
                    self.audit.rules.append((name, cls, (), kernel))
                return True
        return False

    # -- recording --------------------------------------------------------------

    def _record(self, parent_label: int, parent_cls: C, cand: Candidate) -> None:
        child_labels = []
        child_classes = []
        for raw in cand.children:
            canon = self.pack.canonicalize(raw)
            if canon != raw and self.audit is not None:
                self.audit.canonicalizations.append((raw, canon))
            child_classes.append(canon)
            child_labels.append(self._label(canon))
        rule = Rule(parent_label, child_labels, cand.name, cand.kernel)
        if isinstance(cand.kernel, Equivalence):
            key = (parent_label, child_labels[0], cand.name)
            if key not in self._equiv_seen:
                self._equiv_seen.add(key)
                self.equivdb.union(parent_label, child_labels[0], rule)
                self.status.rules_found += 1
                self._rules_since_check += 1
            if self.audit is not None:
                self.audit.equivalences.append((cand.name, parent_cls, cand.children[0]))
        else:
            if self.ruledb.add(rule):
                self.status.rules_found += 1
                self._rules_since_check += 1
            if self.audit is not None:
                self.audit.rules.append((cand.name, parent_cls, tuple(child_classes), cand.kernel))

    # -- specification detection --------------------------------------------------

    def rep_rules(self) -> set[Rule]:
        """All recorded rules, relabeled onto equivalence-class representatives."""
        find = self.equivdb.find
        return {rule.relabel(find) for rule in self.ruledb}

    def detect_specification(self) -> bool:
        self._rules_since_check = 0
        pruned = prune_to_spec_union(self.rep_rules())
        root_rep = self.equivdb.find(self.root_label)
        if not any(rule.parent == root_rep for rule in pruned):
            return False
        encodings = {}
        for rule in pruned:
            for label in (rule.parent, *rule.children):
                if label not in encodings:
                    encodings[label] = self.classdb.encoding(label)
        self.specification = extract_specification(pruned, root_rep, encodings)
        self.status.spec_found = True
        return True

    # -- main loop ------------------------------------------------------------------

    def run(self) -> ExplorationStatus:
        start = time.monotonic()
        if self.detect_specification():
            return self.status
        while True:
            if self.status.expansions_performed >= self.max_expansions:
                break
            if time.monotonic() - start > self.max_seconds:
                break
            try:
                label, phase = self.queue.next()
            except Exhausted:
                self.status.exhausted = True
                self.detect_specification()
                break
            cls = self.classdb.get(label)
            if phase == INITIAL:
                applied = False
                for strategy in self.pack.inferral:
                    cand = strategy(cls)
                    if cand is not None:
                        self._record(label, cls, cand)
                        self.queue.retire(label)
                        applied = True
                        break
                if not applied:
                    for strategy in self.pack.initial:
                        for cand in strategy(cls):
                            self._record(label, cls, cand)
            else:
                _, i = phase
                for strategy in self.pack.expansion[i]:
                    for cand in strategy(cls):
                        self._record(label, cls, cand)
            self.status.expansions_performed += 1
            if self._rules_since_check >= self.spec_check_interval:
                if self.detect_specification():
                    return self.status
        if not self.status.spec_found:
            self.detect_specification()
        return self.status


def run_exploration(
    root: C,
    pack: StrategyPack[C],
    max_expansions: int = 200_000,
    max_seconds: float = 300.0,
    spec_check_interval: int = 1000,
    audit: Optional[ExplorationAudit] = None,
) -> tuple[ExplorationStatus, Explorer[C]]:
    """Run exploration from a root class; returns (status, explorer).

    The explorer exposes the rule universe, the databases, and the found
    specification (when ``status.spec_found``).
    """
    explorer = Explorer(
        root,
        pack,
        max_expansions=max_expansions,
        max_seconds=max_seconds,
        spec_check_interval=spec_check_interval,
        audit=audit,
    )
    explorer.run()
    return explorer.status, explorer
