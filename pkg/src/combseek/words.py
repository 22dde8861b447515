"""A second, minimal domain: binary words avoiding a set of factors.

A class is identified by its suffix state: the longest suffix of the word
read so far that is a proper prefix of some forbidden factor. Appending a
letter either completes a factor (the extension dies) or moves to another
state, giving rules with a one-letter shift; the empty word contributes the
base term. Exploring this domain exercises the engine end to end without
any tiling machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from combseek.engine.explorer import Candidate, StrategyPack
from combseek.engine.kernels import ShiftedDisjointUnion

ALPHABET = ("0", "1")


def canonical_factors(factors: tuple[str, ...]) -> tuple[str, ...]:
    """Drop factors containing another factor; sort."""
    kept = []
    for f in factors:
        if any(g in f for g in factors if g != f and len(g) <= len(f)):
            continue
        kept.append(f)
    return tuple(sorted(set(kept)))


@dataclass(frozen=True)
class WordClass:
    """Words readable from ``state`` without ever completing a factor."""

    forbidden: tuple[str, ...]
    state: str = ""

    def __post_init__(self):
        for f in self.forbidden:
            if not f or any(ch not in ALPHABET for ch in f):
                raise ValueError(f"factors must be non-empty binary strings: {f!r}")

    def encode(self) -> str:
        return f"{self.state};{','.join(self.forbidden)}"

    def _next_state(self, letter: str) -> str | None:
        """Suffix state after appending letter; None when a factor completes."""
        extended = self.state + letter
        if any(extended.endswith(f) for f in self.forbidden):
            return None
        for start in range(len(extended)):
            suffix = extended[start:]
            if any(f.startswith(suffix) and f != suffix for f in self.forbidden):
                return suffix
        return ""


def word_expand(cls: WordClass) -> Iterator[Candidate]:
    """The single rule decomposing a word class by its first appended letter."""
    children = []
    for letter in ALPHABET:
        nxt = cls._next_state(letter)
        if nxt is not None:
            children.append(WordClass(cls.forbidden, nxt))
    yield Candidate(
        name="word_expand",
        children=tuple(children),
        kernel=ShiftedDisjointUnion(len(children), shift=1, base_terms=(1,)),
    )


def words_pack() -> StrategyPack[WordClass]:
    return StrategyPack(
        name="binary-words",
        canonicalize=lambda c: c,
        inferral=[],
        initial=[],
        expansion=[[word_expand]],
        verification=[],
    )


def root_word_class(factors: tuple[str, ...]) -> WordClass:
    return WordClass(canonical_factors(factors))


def brute_force_word_counts(factors: tuple[str, ...], max_n: int) -> list[int]:
    """Counting oracle: enumerate all binary strings outright."""
    counts = []
    level = [""]
    counts.append(sum(1 for w in level if _factor_free(w, factors)))
    for _ in range(max_n):
        level = [w + ch for w in level for ch in ALPHABET]
        counts.append(sum(1 for w in level if _factor_free(w, factors)))
    return counts


def _factor_free(word: str, factors: tuple[str, ...]) -> bool:
    return not any(f in word for f in factors)
