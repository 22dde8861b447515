"""Polynomial-time counting from a specification.

Terms are computed size by size with exact integer arithmetic. Within one
size, labels are resolved in dependency order of their same-size reliances;
if a pass makes no progress the specification is not productive, which the
engine's strategies are supposed to rule out, so that is reported as an
error rather than silently looping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from combseek.engine.kernels import (
    DisjointUnion,
    Equivalence,
    Product,
    ShiftedDisjointUnion,
    Verified,
)
from combseek.engine.rules import Rule, Specification


class CycleDetected(RuntimeError):
    """A size-n count depends on itself at size n: non-productive rules."""

    def __init__(self, label: int, size: int):
        super().__init__(f"count of class {label} at size {size} relies on itself")
        self.label = label
        self.size = size


@dataclass
class OpCounter:
    """Instrumentation: big-integer multiplications performed."""

    multiplications: int = 0


def _convolve_upto(
    a: Sequence[int], b: Sequence[int], limit: int, ops: OpCounter
) -> list[int]:
    out = [0] * (limit + 1)
    for i, ai in enumerate(a[: limit + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: limit + 1 - i]):
            if bj == 0:
                continue
            out[i + j] += ai * bj
            ops.multiplications += 1
    return out


def _evaluate(
    rule: Rule, n: int, terms: dict[int, list[int | None]], ops: OpCounter
) -> int:
    kernel = rule.kernel
    if isinstance(kernel, Verified):
        return kernel.term(n)
    if isinstance(kernel, DisjointUnion):
        return sum(terms[c][n] for c in rule.children)  # type: ignore[misc]
    if isinstance(kernel, ShiftedDisjointUnion):
        base = kernel.base_terms[n] if n < len(kernel.base_terms) else 0
        if n < kernel.shift:
            return base
        return base + sum(terms[c][n - kernel.shift] for c in rule.children)  # type: ignore[misc]
    if isinstance(kernel, Product):
        target = n - kernel.shift
        if target < 0:
            return 0
        # Children in the reliance set may not have a size-n term yet; the
        # defining property of the set is that those terms carry a zero
        # coefficient, so a placeholder 0 is exact.
        series = []
        for c in rule.children:
            known = terms[c][: target + 1]
            series.append([0 if v is None else v for v in known])
        acc = series[0]
        for nxt in series[1:]:
            acc = _convolve_upto(acc, nxt, target, ops)
        return acc[target] if target < len(acc) else 0
    raise TypeError(f"cannot count through kernel {kernel!r}")


def count_terms_all(
    spec: Specification, max_n: int, ops: OpCounter | None = None
) -> dict[int, list[int]]:
    """Counting sequences 0..max_n for every label of the specification."""
    ops = ops if ops is not None else OpCounter()
    if any(isinstance(r.kernel, Equivalence) for r in spec.rules.values()):
        raise TypeError("equivalence rules cannot appear in a specification")
    terms: dict[int, list[int | None]] = {
        label: [None] * (max_n + 1) for label in spec.rules
    }
    for n in range(max_n + 1):
        pending = set(spec.rules)
        while pending:
            progressed = False
            for label in sorted(pending):
                rule = spec.rules[label]
                needed = rule.kernel.relies_at_equal_size()
                if all(terms[rule.children[i]][n] is not None for i in needed):
                    terms[label][n] = _evaluate(rule, n, terms, ops)
                    pending.discard(label)
                    progressed = True
            if not progressed:
                raise CycleDetected(min(pending), n)
    return {label: [int(v) for v in seq] for label, seq in terms.items()}  # type: ignore[arg-type]


def count_terms(
    spec: Specification, max_n: int, ops: OpCounter | None = None
) -> list[int]:
    """The root's counting sequence for sizes 0..max_n."""
    return count_terms_all(spec, max_n, ops)[spec.root]


@dataclass
class RuleAudit:
    rule: Rule
    reliance_ok: bool = True
    dominance_failures: list = field(default_factory=list)  # (child, n)
    strictness_failures: list = field(default_factory=list)  # child labels

    @property
    def passed(self) -> bool:
        return self.reliance_ok and not self.dominance_failures and not self.strictness_failures


@dataclass
class ProductivityReport:
    checks: list[RuleAudit]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[RuleAudit]:
        return [c for c in self.checks if not c.passed]


def audit_productivity(
    spec: Specification,
    oracle: Callable[[int], Sequence[int]],
    max_n: int,
) -> ProductivityReport:
    """Empirically check the productivity conditions against true counts.

    ``oracle`` maps a label to its true counting sequence for sizes
    0..max_n. Condition 1 (reliances never exceed the parent size) is
    structural; condition 2 is checked for every child relied on at equal
    size: (a) the parent's count dominates the child's at every size, (b)
    strictly at some size. Failures are collected, not raised.
    """
    checks = []
    for label in sorted(spec.rules):
        rule = spec.rules[label]
        audit = RuleAudit(rule)
        for n in range(max_n + 1):
            if any(r > n for r in rule.kernel.reliance(n)):
                audit.reliance_ok = False
                break
        parent_counts = list(oracle(label))
        for i in rule.kernel.relies_at_equal_size():
            child_counts = list(oracle(rule.children[i]))
            dominated = True
            for n in range(max_n + 1):
                if parent_counts[n] < child_counts[n]:
                    audit.dominance_failures.append((rule.children[i], n))
                    dominated = False
            if dominated and not any(
                parent_counts[n] > child_counts[n] for n in range(max_n + 1)
            ):
                audit.strictness_failures.append(rule.children[i])
        checks.append(audit)
    return ProductivityReport(checks)
