"""Generating-function systems associated with a specification.

Each label gets one equation whose right side is an expression tree over
class symbols, sums, products, powers of x, the geometric series, and
explicit series. Disjoint unions become sums, products become products
(the reliance set matters for counting only, not for the equations), and
verified classes contribute their closed forms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from combseek.engine.kernels import (
    DisjointUnion,
    Product,
    ShiftedDisjointUnion,
    Verified,
)
from combseek.engine.rules import Specification


class Node:
    def render(self) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self) -> int:
        return hash(json.dumps(self.to_json(), sort_keys=True))


def _wrap(node: Node) -> str:
    text = node.render()
    return f"({text})" if isinstance(node, Sum) else text


class Var(Node):
    def __init__(self, label: int):
        self.label = label

    def render(self) -> str:
        return f"F{self.label}(x)"

    def to_json(self) -> dict:
        return {"op": "var", "label": self.label}


class XPow(Node):
    """x^k; k = 0 is the constant 1."""

    def __init__(self, k: int):
        self.k = k

    def render(self) -> str:
        return "1" if self.k == 0 else "x" if self.k == 1 else f"x^{self.k}"

    def to_json(self) -> dict:
        return {"op": "xpow", "k": self.k}


class Geom(Node):
    """x^k / (1 - x)."""

    def __init__(self, k: int):
        self.k = k

    def render(self) -> str:
        if self.k == 0:
            return "1/(1-x)"
        num = "x" if self.k == 1 else f"x^{self.k}"
        return f"{num}/(1-x)"

    def to_json(self) -> dict:
        return {"op": "geom", "k": self.k}


class SeriesNode(Node):
    """An explicit series; exact when it terminates at its last coefficient."""

    def __init__(self, coeffs: tuple[int, ...], exact: bool = True):
        self.coeffs = tuple(int(c) for c in coeffs)
        self.exact = exact

    def render(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            x = XPow(k).render()
            parts.append(x if c == 1 and k > 0 else str(c) if k == 0 else f"{c}*{x}")
        body = " + ".join(parts) if parts else "0"
        if self.exact:
            return body
        return f"{body} + O(x^{len(self.coeffs)})"

    def to_json(self) -> dict:
        return {"op": "series", "coeffs": list(self.coeffs), "exact": self.exact}


class Sum(Node):
    def __init__(self, args: tuple[Node, ...]):
        self.args = tuple(args)

    def render(self) -> str:
        return " + ".join(a.render() for a in self.args)

    def to_json(self) -> dict:
        return {"op": "sum", "args": [a.to_json() for a in self.args]}


class Prod(Node):
    def __init__(self, args: tuple[Node, ...]):
        self.args = tuple(args)

    def render(self) -> str:
        return "*".join(_wrap(a) for a in self.args)

    def to_json(self) -> dict:
        return {"op": "prod", "args": [a.to_json() for a in self.args]}


def _sum(args: list[Node]) -> Node:
    if not args:
        return SeriesNode(())
    if len(args) == 1:
        return args[0]
    return Sum(tuple(args))


def _prod(args: list[Node]) -> Node:
    if not args:
        return XPow(0)
    if len(args) == 1:
        return args[0]
    return Prod(tuple(args))


def _verified_node(kernel: Verified, series_order: int) -> Node:
    if kernel.kind == "monotone":
        lo, hi = kernel.params
        if hi is None:
            return Geom(lo)
        if hi <= lo:
            return SeriesNode(())
        if hi == lo + 1:
            return XPow(lo)
        return Sum(tuple(XPow(k) for k in range(lo, hi)))
    if kernel.kind == "explicit":
        return SeriesNode(tuple(kernel.params))
    # unrecognized generators would be truncated here
    return SeriesNode(tuple(kernel.term(n) for n in range(series_order + 1)), exact=False)


@dataclass
class GFSystem:
    """Equations F_label(x) = rhs, one per specification label."""

    root: int
    equations: list[tuple[int, Node]]

    def rhs(self, label: int) -> Node:
        for lhs, node in self.equations:
            if lhs == label:
                return node
        raise KeyError(label)

    def labels(self) -> list[int]:
        return [lhs for lhs, _ in self.equations]

    def render(self) -> str:
        return "\n".join(f"F{lhs}(x) = {node.render()}" for lhs, node in self.equations)

    def to_json(self) -> dict:
        return {
            "root": self.root,
            "equations": [
                {"lhs": lhs, "rhs": node.to_json()} for lhs, node in self.equations
            ],
        }


def emit_gf_system(spec: Specification, series_order: int = 20) -> GFSystem:
    equations = []
    for label in spec.labels():
        rule = spec.rules[label]
        kernel = rule.kernel
        if isinstance(kernel, Verified):
            rhs: Node = _verified_node(kernel, series_order)
        elif isinstance(kernel, DisjointUnion):
            rhs = _sum([Var(c) for c in rule.children])
        elif isinstance(kernel, ShiftedDisjointUnion):
            parts: list[Node] = []
            if any(kernel.base_terms):
                parts.append(SeriesNode(kernel.base_terms))
            if rule.children:
                shifted = _prod(
                    [XPow(kernel.shift), _sum([Var(c) for c in rule.children])]
                )
                parts.append(shifted)
            rhs = _sum(parts)
        elif isinstance(kernel, Product):
            args: list[Node] = []
            if kernel.shift:
                args.append(XPow(kernel.shift))
            args.extend(Var(c) for c in rule.children)
            rhs = _prod(args)
        else:
            raise TypeError(f"cannot emit equations for kernel {kernel!r}")
        equations.append((label, rhs))
    return GFSystem(spec.root, equations)


def _match(a: Node, b: Node, mapping: dict[int, int], used: set[int]) -> Iterator[None]:
    """Yield once per way of matching a against b, extending the label map."""
    if type(a) is not type(b):
        return
    if isinstance(a, Var):
        assert isinstance(b, Var)
        if a.label in mapping:
            if mapping[a.label] == b.label:
                yield
            return
        if b.label in used:
            return
        mapping[a.label] = b.label
        used.add(b.label)
        yield
        del mapping[a.label]
        used.discard(b.label)
        return
    if isinstance(a, (XPow, Geom, SeriesNode)):
        if a == b:
            yield
        return
    assert isinstance(a, (Sum, Prod)) and isinstance(b, (Sum, Prod))
    if len(a.args) != len(b.args):
        return

    def assign(i: int, taken: set[int]) -> Iterator[None]:
        if i == len(a.args):
            yield
            return
        for j in range(len(b.args)):
            if j in taken:
                continue
            for _ in _match(a.args[i], b.args[j], mapping, used):
                taken.add(j)
                yield from assign(i + 1, taken)
                taken.discard(j)

    yield from assign(0, set())


def isomorphic(a: GFSystem, b: GFSystem) -> bool:
    """True when a label bijection maps one system onto the other.

    Roots must correspond; sum and product arguments match as multisets.
    """
    if len(a.equations) != len(b.equations):
        return False
    rhs_a = dict(a.equations)
    rhs_b = dict(b.equations)

    def extend(pairs: list[tuple[int, int]], mapping: dict[int, int], used: set[int], verified: set[int]) -> bool:
        open_pairs = [
            (la, lb) for la, lb in mapping.items() if la not in verified
        ]
        if not open_pairs:
            return True
        la, lb = open_pairs[0]
        verified.add(la)
        for _ in _match(rhs_a[la], rhs_b[lb], mapping, used):
            if extend(pairs, mapping, used, verified):
                return True
        verified.discard(la)
        return False

    mapping = {a.root: b.root}
    used = {b.root}
    return extend([], mapping, used, set())
