"""Plain (ungridded) permutation utilities.

Permutations are tuples of the values 0..n-1. The brute-force avoider
enumeration here is the independent counting oracle used to validate every
specification the search engine produces; it never touches the gridded
machinery.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


class RedundantBasis(ValueError):
    """A basis contained a pattern that contains another basis pattern."""


def standardize(values: Iterable[int]) -> tuple[int, ...]:
    """Relabel distinct values by rank, e.g. (6, 2, 8) -> (1, 0, 2)."""
    vals = tuple(values)
    order = sorted(vals)
    rank = {v: i for i, v in enumerate(order)}
    return tuple(rank[v] for v in vals)


def contains(perm: tuple[int, ...], patt: tuple[int, ...]) -> bool:
    """True when some subsequence of ``perm`` standardizes to ``patt``."""
    k = len(patt)
    if k > len(perm):
        return False
    if k == 0:
        return True
    for idxs in combinations(range(len(perm)), k):
        if standardize(perm[i] for i in idxs) == patt:
            return True
    return False


def avoids(perm: tuple[int, ...], basis: Iterable[tuple[int, ...]]) -> bool:
    return not any(contains(perm, b) for b in basis)


def parse_perm(text: str) -> tuple[int, ...]:
    """Parse one-line notation with 1-indexed values, e.g. "132" -> (0, 2, 1)."""
    if not text.isdigit():
        raise ValueError(f"not a permutation: {text!r}")
    vals = tuple(int(ch) - 1 for ch in text)
    if sorted(vals) != list(range(len(vals))):
        raise ValueError(f"not a permutation: {text!r}")
    return vals


def render_perm(perm: tuple[int, ...]) -> str:
    """Inverse of :func:`parse_perm` (1-indexed digits)."""
    if len(perm) > 9:
        raise ValueError("one-line digit notation only supports lengths <= 9")
    return "".join(str(v + 1) for v in perm)


def parse_basis(text: str, sep: str = "_") -> tuple[tuple[int, ...], ...]:
    """Parse a basis string like "1243_1342_2143" and validate it.

    Raises RedundantBasis when one pattern contains another, ValueError on
    malformed input or an empty basis.
    """
    parts = [p for p in text.split(sep) if p]
    if not parts:
        raise ValueError("empty basis")
    basis = tuple(parse_perm(p) for p in parts)
    if len(set(basis)) != len(basis):
        raise RedundantBasis(f"repeated pattern in basis {text!r}")
    for a in basis:
        for b in basis:
            if a != b and contains(a, b):
                raise RedundantBasis(
                    f"{render_perm(a)} contains {render_perm(b)}; basis is reducible"
                )
    return basis


def _extensions(perm: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # Append a new rightmost entry of every possible rank; existing values
    # at or above the new one shift up by one.
    n = len(perm)
    for v in range(n + 1):
        yield tuple(x + (1 if x >= v else 0) for x in perm) + (v,)


def _contains_using_last(perm: tuple[int, ...], patt: tuple[int, ...]) -> bool:
    """Containment where the occurrence must use the last entry of ``perm``."""
    k = len(patt)
    n = len(perm)
    if k == 0 or k > n:
        return False
    last = n - 1
    for idxs in combinations(range(last), k - 1):
        if standardize([perm[i] for i in idxs] + [perm[last]]) == patt:
            return True
    return False


def avoiders_of_size(basis: Iterable[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """All permutations of length ``n`` avoiding every basis pattern.

    Grown one entry at a time: deleting the last entry of an avoider yields an
    avoider, so each level extends the previous one and only occurrences
    through the new entry need checking.
    """
    basis = tuple(basis)
    level: list[tuple[int, ...]] = [()]
    for _ in range(n):
        nxt = []
        for perm in level:
            for ext in _extensions(perm):
                if not any(_contains_using_last(ext, b) for b in basis):
                    nxt.append(ext)
        level = nxt
    return level


def count_avoiders(basis: Iterable[tuple[int, ...]], max_n: int) -> list[int]:
    """Counting sequence of Av(basis) for n = 0..max_n."""
    basis = tuple(basis)
    counts = []
    level: list[tuple[int, ...]] = [()]
    counts.append(len(level))
    for _ in range(max_n):
        nxt = []
        for perm in level:
            for ext in _extensions(perm):
                if not any(_contains_using_last(ext, b) for b in basis):
                    nxt.append(ext)
        level = nxt
        counts.append(len(level))
    return counts
