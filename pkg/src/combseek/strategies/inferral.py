"""Obstruction inferral: add obstructions without changing the gridded set.

Case 1 is purely structural: inside an obstruction, a group of entries that
shares no row or column with the rest and is forced to occur (it is
contained in every member of some requirement list) can be deleted from the
obstruction, leaving a stronger one. Case 2 is semantic: a pattern h can be
added as an obstruction whenever requiring it would empty the tiling, which
the emptiness bound decides exactly. Case 2's candidate patterns are
bounded in length by policy because the search is exponential.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

from combseek.engine.explorer import Candidate
from combseek.engine.kernels import Equivalence
from combseek.strategies.policy import CandidatePolicy
from combseek.tilings.griddedperm import Cell, GriddedPerm
from combseek.tilings.tiling import Tiling, _entry_components


def _case1_additions(tiling: Tiling) -> list[GriddedPerm]:
    additions = []
    for obstruction in tiling.obstructions:
        parts = _entry_components(obstruction)
        if len(parts) < 2:
            continue
        part_indices = _component_indices(obstruction)
        for part, idxs in zip(parts, part_indices):
            if any(
                all(r.contains(part) for r in lst) for lst in tiling.requirements
            ):
                additions.append(obstruction.remove_indices(idxs))
    return additions


def _component_indices(g: GriddedPerm) -> list[list[int]]:
    # mirror of _entry_components, but reporting entry indices per part
    n = len(g)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if g.positions[i][0] == g.positions[j][0] or g.positions[i][1] == g.positions[j][1]:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def obstruction_inferral_case1(tiling: Tiling) -> Candidate | None:
    additions = _case1_additions(tiling)
    additions = [
        g for g in additions if not any(g.contains(o) for o in tiling.obstructions)
    ]
    if not additions:
        return None
    child = Tiling(
        tiling.dims, tiling.obstructions + tuple(additions), tiling.requirements
    )
    return Candidate(name="obs_inf", children=(child,), kernel=Equivalence())


def _valid_griddings(patt: tuple[int, ...], cells: list[Cell]) -> Iterator[GriddedPerm]:
    for pos in product(cells, repeat=len(patt)):
        g = GriddedPerm(patt, pos)
        if g.is_valid():
            yield g


def _witness_bound(tiling: Tiling, h: GriddedPerm) -> int:
    """Size bound for a member containing h, if one exists at all.

    A witness combines an occurrence of h with one requirement occurrence
    per list; a list with a member already contained in h can reuse the
    h-occurrence and contributes nothing. In particular, when every list
    overlaps this way, h itself is a member and trivially occurs.
    """
    bound = len(h)
    for lst in tiling.requirements:
        if not any(h.contains(r) for r in lst):
            bound += max(len(r) for r in lst)
    return bound


def _case2_additions(
    tiling: Tiling, max_len: int, level_budget: int | None = None
) -> list[GriddedPerm]:
    """All inferable patterns of size <= max_len.

    Requiring h empties the tiling exactly when no member of size at most
    the witness bound contains h. Candidates are struck out against the
    members size by size, so deeper levels are enumerated only while
    undecided candidates remain. With a level budget, scanning stops once
    an avoider level outgrows the budget and the undecided candidates are
    conservatively dropped: inferences are then incomplete but still exact,
    which is the trade the exploration pack makes on large tilings.
    """
    undecided: list[tuple[GriddedPerm, int]] = []
    cells = sorted(tiling.nonempty_cells())
    for size in range(1, max_len + 1):
        for patt in sorted(permutations(range(size))):
            for h in _valid_griddings(patt, cells):
                if any(h.contains(o) for o in tiling.obstructions):
                    continue
                bound = _witness_bound(tiling, h)
                if bound > len(h):
                    undecided.append((h, bound))
                # otherwise h is itself a member: it occurs, nothing to infer
    inferable: list[GriddedPerm] = []
    size = 0
    while undecided:
        still = [(h, b) for h, b in undecided if b >= size]
        inferable.extend(h for h, b in undecided if b < size)
        undecided = still
        if not undecided:
            break
        if level_budget is not None and size > 0:
            if len(tiling.avoiders_of_size(size - 1)) > level_budget:
                break  # too costly to decide; forgo further inferences
        members = tiling.gridded_perms_of_size(size)
        if members:
            kept = []
            for h, b in undecided:
                hc = h.cell_counts()
                hit = False
                for member in members:
                    mc = member.cell_counts()
                    if all(mc.get(c, 0) >= k for c, k in hc.items()) and member.contains(h):
                        hit = True
                        break
                if not hit:
                    kept.append((h, b))
            undecided = kept
        size += 1
    return inferable


# avoider-level size beyond which the exploration pack stops hunting for
# emptiness-based inferences on a tiling
CASE2_LEVEL_BUDGET = 400


def obstruction_inferral_case2(policy: CandidatePolicy, level_budget: int | None = CASE2_LEVEL_BUDGET):
    def apply(tiling: Tiling) -> Candidate | None:
        additions = _case2_additions(tiling, policy.obs_inferral_max_len, level_budget)
        if not additions:
            return None
        child = Tiling(
            tiling.dims, tiling.obstructions + tuple(additions), tiling.requirements
        )
        return Candidate(name="obs_inf", children=(child,), kernel=Equivalence())

    return apply


def obstruction_inferral(tiling: Tiling, policy: CandidatePolicy) -> Tiling | None:
    """Both inferral cases at once: the equivalent strengthened tiling
    (canonicalized), or None when nothing can be inferred."""
    additions = _case1_additions(tiling) + _case2_additions(
        tiling, policy.obs_inferral_max_len
    )
    additions = [
        g for g in additions if not any(g.contains(o) for o in tiling.obstructions)
    ]
    if not additions:
        return None
    return Tiling(
        tiling.dims, tiling.obstructions + tuple(additions), tiling.requirements
    ).canonicalize()
