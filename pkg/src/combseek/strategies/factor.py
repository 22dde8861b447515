"""Factor: split a tiling into non-interacting groups of cells.

Cells interact when they share a row or column or appear together in an
obstruction or requirement list. The connected components of that relation
partition the nonempty cells; Grid(T) is then the "interleaving product" of
the component subtilings, counted by a convolution restricted by the
reliance set S (a child is in S when some sibling has no size-0 object,
which is what makes its same-size term vanish).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from combseek.engine.explorer import Candidate
from combseek.engine.kernels import Product
from combseek.tilings.griddedperm import Cell, GriddedPerm
from combseek.tilings.tiling import Tiling


def _interaction_components(tiling: Tiling) -> list[list[Cell]]:
    cells = tiling.nonempty_cells()
    index = {c: i for i, c in enumerate(cells)}
    parent = list(range(len(cells)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    for (i, a), (j, b) in combinations(enumerate(cells), 2):
        if a[0] == b[0] or a[1] == b[1]:
            union(i, j)
    for g in tiling.obstructions:
        involved = sorted(index[c] for c in g.cells() if c in index)
        for a, b in zip(involved, involved[1:]):
            union(a, b)
    for lst in tiling.requirements:
        involved = sorted({index[c] for r in lst for c in r.cells() if c in index})
        for a, b in zip(involved, involved[1:]):
            union(a, b)

    groups: dict[int, list[Cell]] = {}
    for i, c in enumerate(cells):
        groups.setdefault(find(i), []).append(c)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def _subtiling(tiling: Tiling, part: Sequence[Cell]) -> Tiling:
    xs = sorted({x for x, _ in part})
    ys = sorted({y for _, y in part})
    xmap = {x: i for i, x in enumerate(xs)}
    ymap = {y: i for i, y in enumerate(ys)}
    frame = {(x, y) for x in xs for y in ys}

    def remap(g: GriddedPerm) -> GriddedPerm:
        return g.apply_cell_map(lambda c: (xmap[c[0]], ymap[c[1]]))

    obs = [remap(g) for g in tiling.obstructions if g.cells() <= frame]
    reqs = [
        [remap(r) for r in lst]
        for lst in tiling.requirements
        if all(r.cells() <= frame for r in lst)
    ]
    return Tiling((len(xs), len(ys)), obs, reqs)


def _has_positive_object(child: Tiling) -> bool:
    """At least one gridded permutation of size >= 1.

    Children restricted from a canonical tiling have no empty requirement
    members, so any member witnessing nonemptiness has positive size; with
    no requirements a single point in a nonempty cell always works.
    """
    if not child.requirements:
        return bool(child.nonempty_cells())
    return not child.is_empty()


def _partition_name(parts: Sequence[Sequence[Cell]]) -> str:
    return "factor:" + "|".join(
        "+".join(f"{x},{y}" for x, y in part) for part in parts
    )


def _candidate_for(tiling: Tiling, parts: list[list[Cell]]) -> Candidate | None:
    children = [_subtiling(tiling, part) for part in parts]
    if not all(_has_positive_object(c) for c in children):
        return None
    has_empty_perm = [not c.requirements for c in children]
    reliance_set = [
        i
        for i in range(len(children))
        if any(not has_empty_perm[j] for j in range(len(children)) if j != i)
    ]
    return Candidate(
        name=_partition_name(parts),
        children=tuple(children),
        kernel=Product(len(children), reliance_set, shift=0),
    )


def factor(tiling: Tiling) -> Iterator[Candidate]:
    """Full factorization, plus each pairwise coarsening when >= 3 parts.

    The coarsenings keep two components together, which is sometimes the
    decomposition that lets the search close a specification.
    """
    parts = _interaction_components(tiling)
    if len(parts) <= 1:
        return
    cand = _candidate_for(tiling, parts)
    if cand is not None:
        yield cand
    if len(parts) >= 3:
        for i, j in combinations(range(len(parts)), 2):
            merged = sorted(parts[i] + parts[j])
            coarser = [merged] + [p for k, p in enumerate(parts) if k not in (i, j)]
            coarser.sort(key=lambda g: g[0])
            cand = _candidate_for(tiling, coarser)
            if cand is not None:
                yield cand
