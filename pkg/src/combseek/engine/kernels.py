"""Counting kernels: the semantic payload of a combinatorial rule.

A kernel describes how the size-n count of a parent class is computed from
its children's counts, and which child sizes that computation relies on.
The closed set of kernels here covers disjoint unions, shifted disjoint
unions, products with a reliance set, equivalences, and verified classes
whose terms are known outright.
"""

from __future__ import annotations

from typing import Callable, Sequence


class Kernel:
    """Base class; concrete kernels define arity and reliance behavior."""

    arity: int

    def reliance(self, n: int) -> tuple[int, ...]:
        """Largest child sizes needed to compute the parent count at size n."""
        raise NotImplementedError

    def relies_at_equal_size(self) -> tuple[int, ...]:
        """Indices of children whose size-n count feeds the parent's size-n count."""
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __hash__(self) -> int:
        return hash(repr(sorted(self.to_json().items())))


class DisjointUnion(Kernel):
    """Parent is the disjoint union of the children: a_n = sum of b_n."""

    def __init__(self, arity: int):
        if arity < 1:
            raise ValueError("disjoint union needs at least one child")
        self.arity = arity

    def reliance(self, n: int) -> tuple[int, ...]:
        return (n,) * self.arity

    def relies_at_equal_size(self) -> tuple[int, ...]:
        return tuple(range(self.arity))

    def to_json(self) -> dict:
        return {"type": "disjoint_union", "arity": self.arity}


class ShiftedDisjointUnion(Kernel):
    """a_n = base_n + sum of children at size n - shift (shift >= 1)."""

    def __init__(self, arity: int, shift: int, base_terms: Sequence[int]):
        if shift < 1:
            raise ValueError("shift must be at least 1")
        self.arity = arity
        self.shift = shift
        self.base_terms = tuple(int(b) for b in base_terms)

    def reliance(self, n: int) -> tuple[int, ...]:
        return (n - self.shift,) * self.arity

    def relies_at_equal_size(self) -> tuple[int, ...]:
        return ()

    def to_json(self) -> dict:
        return {
            "type": "shifted_disjoint_union",
            "arity": self.arity,
            "shift": self.shift,
            "base": list(self.base_terms),
        }


class Product(Kernel):
    """Convolution of the children, restricted by the reliance set.

    a_n sums products of child counts over index tuples summing to n - shift,
    excluding tuples where a child in the reliance set contributes at full
    size n. A child index is in the reliance set exactly when some sibling
    has no size-0 objects, which makes the excluded tuples vanish anyway; the
    set's role is to cap the sizes the computation asks for.
    """

    def __init__(self, arity: int, reliance_set: Sequence[int], shift: int = 0):
        if arity < 1:
            raise ValueError("product needs at least one child")
        if shift < 0:
            raise ValueError("shift must be non-negative")
        self.arity = arity
        self.reliance_set = tuple(sorted(set(reliance_set)))
        if any(i < 0 or i >= arity for i in self.reliance_set):
            raise ValueError("reliance set indices out of range")
        self.shift = shift

    def reliance(self, n: int) -> tuple[int, ...]:
        full = n - self.shift
        return tuple(
            full - 1 if i in self.reliance_set else full for i in range(self.arity)
        )

    def relies_at_equal_size(self) -> tuple[int, ...]:
        if self.shift > 0:
            return ()
        return tuple(i for i in range(self.arity) if i not in self.reliance_set)

    def to_json(self) -> dict:
        return {
            "type": "product",
            "arity": self.arity,
            "reliance_set": list(self.reliance_set),
            "shift": self.shift,
        }


class Equivalence(Kernel):
    """Single child with identical counts; never stored among counting rules."""

    arity = 1

    def reliance(self, n: int) -> tuple[int, ...]:
        return (n,)

    def relies_at_equal_size(self) -> tuple[int, ...]:
        return (0,)

    def to_json(self) -> dict:
        return {"type": "equivalence"}


class Verified(Kernel):
    """Nullary kernel: the class's terms are known independently.

    ``kind`` and ``params`` identify the recognized family so the term
    generator survives serialization. Kinds:

    - "monotone": params (min_len, max_len) give terms 1 for
      min_len <= n < max_len (max_len None means unbounded), 0 otherwise.
      Covers the empty-perm class (0, 1), the atom (1, 2), and monotone
      cells generally.
    - "explicit": params is a tuple of terms, 0 beyond its end.
    """

    arity = 0

    def __init__(self, kind: str, params: tuple):
        self.kind = kind
        self.params = params
        self._gen = self._generator()

    def _generator(self) -> Callable[[int], int]:
        if self.kind == "monotone":
            lo, hi = self.params
            return lambda n: 1 if n >= lo and (hi is None or n < hi) else 0
        if self.kind == "explicit":
            terms = tuple(self.params)
            return lambda n: terms[n] if n < len(terms) else 0
        raise ValueError(f"unknown verified kind {self.kind!r}")

    @classmethod
    def monotone(cls, min_len: int, max_len: int | None) -> "Verified":
        return cls("monotone", (min_len, max_len))

    @classmethod
    def empty_class(cls) -> "Verified":
        return cls.monotone(0, 1)

    @classmethod
    def atom(cls) -> "Verified":
        return cls.monotone(1, 2)

    @classmethod
    def explicit(cls, terms: Sequence[int]) -> "Verified":
        return cls("explicit", tuple(int(t) for t in terms))

    def term(self, n: int) -> int:
        return self._gen(n)

    def reliance(self, n: int) -> tuple[int, ...]:
        return ()

    def relies_at_equal_size(self) -> tuple[int, ...]:
        return ()

    def to_json(self) -> dict:
        if self.kind == "monotone":
            lo, hi = self.params
            return {"type": "verified", "kind": "monotone", "min_len": lo, "max_len": hi}
        return {"type": "verified", "kind": "explicit", "terms": list(self.params)}


def kernel_from_json(data: dict) -> Kernel:
    kind = data["type"]
    if kind == "disjoint_union":
        return DisjointUnion(data["arity"])
    if kind == "shifted_disjoint_union":
        return ShiftedDisjointUnion(data["arity"], data["shift"], data["base"])
    if kind == "product":
        return Product(data["arity"], data["reliance_set"], data.get("shift", 0))
    if kind == "equivalence":
        return Equivalence()
    if kind == "verified":
        if data["kind"] == "monotone":
            return Verified.monotone(data["min_len"], data["max_len"])
        return Verified.explicit(data["terms"])
    raise ValueError(f"unknown kernel type {kind!r}")
