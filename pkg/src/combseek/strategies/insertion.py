"""Requirement insertion: split a tiling by avoidance/containment of a set H.

Grid(T) is the disjoint union of the tilings obtained by adding H as
obstructions and by adding H as one requirement list. The strategy applies
only when both sides are nonempty.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from combseek.engine.explorer import Candidate
from combseek.engine.kernels import DisjointUnion
from combseek.strategies.policy import CandidatePolicy
from combseek.tilings.griddedperm import GriddedPerm
from combseek.tilings.tiling import Tiling


def requirement_insertion(
    tiling: Tiling, patterns: tuple[GriddedPerm, ...]
) -> Candidate | None:
    """Insert H = ``patterns``; None when either child would be empty."""
    avoid_child = Tiling(
        tiling.dims, tiling.obstructions + patterns, tiling.requirements
    )
    contain_child = Tiling(
        tiling.dims, tiling.obstructions, tiling.requirements + (patterns,)
    )
    if avoid_child.canonicalize().is_empty() or contain_child.canonicalize().is_empty():
        return None
    return Candidate(
        name=_insertion_name(patterns),
        children=(avoid_child, contain_child),
        kernel=DisjointUnion(2),
    )


def _insertion_name(patterns: tuple[GriddedPerm, ...]) -> str:
    parts = []
    for g in patterns:
        cells = set(g.positions)
        if len(cells) == 1:
            patt = "".join(str(v + 1) for v in g.pattern)
            (cell,) = cells
            parts.append(f"{patt}@{cell}")
        else:
            parts.append(g.encode())
    return "req_ins:" + ";".join(parts)


def _localized_candidates(
    tiling: Tiling, max_len: int
) -> Iterator[tuple[GriddedPerm, ...]]:
    for cell in sorted(tiling.nonempty_cells()):
        for size in range(1, max_len + 1):
            for patt in sorted(permutations(range(size))):
                yield (GriddedPerm.localized(patt, cell),)


def _crossing_candidates(
    tiling: Tiling, max_len: int
) -> Iterator[tuple[GriddedPerm, ...]]:
    from itertools import product

    cells = sorted(tiling.nonempty_cells())
    for size in range(2, max_len + 1):
        for patt in sorted(permutations(range(size))):
            for pos in product(cells, repeat=size):
                if len(set(pos)) > 1:
                    g = GriddedPerm(patt, pos)
                    if g.is_valid():
                        yield (g,)


def insertion_factory(policy: CandidatePolicy):
    """Expansion strategy: requirement insertion over the policy's candidates."""

    def apply(tiling: Tiling) -> Iterator[Candidate]:
        seen: set[tuple[GriddedPerm, ...]] = set()
        candidates: list[tuple[GriddedPerm, ...]] = list(
            _localized_candidates(tiling, policy.max_req_insert_len)
        )
        if policy.allow_crossing_insertions:
            candidates.extend(_crossing_candidates(tiling, policy.max_req_insert_len))
        for patterns in candidates:
            if patterns in seen:
                continue
            seen.add(patterns)
            # a pattern containing an obstruction can never occur, so the
            # containment child would be empty
            if any(p.contains(o) for p in patterns for o in tiling.obstructions):
                continue
            cand = requirement_insertion(tiling, patterns)
            if cand is not None:
                yield cand

    return apply
