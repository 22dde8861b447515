"""Combinatorial rules and specifications over integer class labels."""

from __future__ import annotations

import json
from typing import Callable, Iterable, Mapping

from combseek.engine.kernels import Equivalence, Kernel, Verified, kernel_from_json

SPEC_FORMAT_VERSION = 1


class Rule:
    """A decomposition ``parent <- children`` with its counting kernel."""

    __slots__ = ("parent", "children", "strategy_name", "kernel", "_hash")

    def __init__(
        self,
        parent: int,
        children: Iterable[int],
        strategy_name: str,
        kernel: Kernel,
    ):
        self.parent = parent
        self.children = tuple(children)
        self.strategy_name = strategy_name
        self.kernel = kernel
        if isinstance(kernel, Verified):
            if self.children:
                raise ValueError("verified rules have no children")
        elif kernel.arity != len(self.children):
            raise ValueError(
                f"kernel arity {kernel.arity} != {len(self.children)} children"
            )
        self._hash = hash((self.parent, self.children, self.strategy_name))

    def key(self) -> tuple:
        """Deterministic tie-break order: (parent, children, strategy name)."""
        return (self.parent, self.children, self.strategy_name)

    def is_equivalence(self) -> bool:
        return isinstance(self.kernel, Equivalence)

    def relabel(self, f: Callable[[int], int]) -> "Rule":
        return Rule(f(self.parent), (f(c) for c in self.children), self.strategy_name, self.kernel)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Rule):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Rule({self.parent} <- {self.children} via {self.strategy_name})"

    def to_json(self) -> dict:
        return {
            "parent": self.parent,
            "children": list(self.children),
            "strategy": self.strategy_name,
            "kernel": self.kernel.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Rule":
        return cls(
            data["parent"],
            data["children"],
            data["strategy"],
            kernel_from_json(data["kernel"]),
        )


class Specification:
    """A closed set of rules rooted at a class of interest.

    Closure: every child label of every rule appears exactly once as a
    parent label (the rule map's keys), and the root is a key.
    """

    def __init__(self, root: int, rules: Mapping[int, Rule], encodings: Mapping[int, str] | None = None):
        self.root = root
        self.rules = dict(rules)
        self.encodings = dict(encodings or {})
        self._validate()

    def _validate(self) -> None:
        if self.root not in self.rules:
            raise ValueError("root has no rule")
        for label, rule in self.rules.items():
            if rule.parent != label:
                raise ValueError(f"rule for {label} has parent {rule.parent}")
            if rule.is_equivalence():
                raise ValueError("equivalence rules cannot appear in a specification")
            for child in rule.children:
                if child not in self.rules:
                    raise ValueError(f"child {child} of {label} has no rule")

    def labels(self) -> list[int]:
        ordered = [self.root]
        ordered.extend(sorted(l for l in self.rules if l != self.root))
        return ordered

    def __len__(self) -> int:
        return len(self.rules)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Specification):
            return NotImplemented
        return self.root == other.root and self.rules == other.rules

    def to_json(self) -> dict:
        classes = [
            {"label": label, "encoding": self.encodings.get(label, "")}
            for label in self.labels()
        ]
        return {
            "format": SPEC_FORMAT_VERSION,
            "root": self.root,
            "classes": classes,
            "rules": [self.rules[label].to_json() for label in self.labels()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Specification":
        if data.get("format") != SPEC_FORMAT_VERSION:
            raise ValueError(f"unsupported spec format {data.get('format')!r}")
        rules = {}
        for rd in data["rules"]:
            rule = Rule.from_json(rd)
            rules[rule.parent] = rule
        encodings = {c["label"]: c.get("encoding", "") for c in data.get("classes", [])}
        return cls(data["root"], rules, encodings)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "Specification":
        return cls.from_json(json.loads(text))

    def to_dot(self) -> str:
        """Graphviz rendering: one node per class, one junction node per rule."""
        lines = ["digraph specification {", "  node [shape=box];"]
        for label in self.labels():
            enc = self.encodings.get(label, "")
            text = f"{label}"
            if enc:
                short = enc if len(enc) <= 40 else enc[:37] + "..."
                text += "\\n" + short.replace('"', '\\"')
            shape = "box" if label != self.root else "doubleoctagon"
            lines.append(f'  c{label} [label="{text}", shape={shape}];')
        for label in self.labels():
            rule = self.rules[label]
            junction = f"r{label}"
            name = rule.strategy_name.replace('"', '\\"')
            lines.append(
                f'  {junction} [shape=point, width=0.08, xlabel="{name}"];'
            )
            lines.append(f"  c{label} -> {junction} [arrowhead=none];")
            for child in rule.children:
                lines.append(f"  {junction} -> c{child};")
        lines.append("}")
        return "\n".join(lines) + "\n"
