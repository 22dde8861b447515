"""Point placement: isolate one entry of a required pattern in its own cell.

Placing entry ``idx`` of the single pattern r of a singleton requirement
list, extreme in a direction d, splits the row and column of r's cell c into
three each. Every gridded permutation of the old tiling corresponds to
exactly one "point multiplex" on the new tiling: the regridding that
isolates, of all points able to play the placed role in an occurrence of r,
the one most extreme in direction d. Size-preserving bijection, so this is
an equivalence.
"""

from __future__ import annotations

from typing import Iterator

from combseek.engine.explorer import Candidate
from combseek.engine.kernels import Equivalence
from combseek.tilings.griddedperm import Cell, GriddedPerm
from combseek.tilings.tiling import Tiling

DIRECTIONS = ("left", "right", "up", "down")


def _weakly_increasing(length: int, choices: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for i, first in enumerate(choices):
        for rest in _weakly_increasing(length - 1, choices[i:]):
            yield (first,) + rest


def multiplexes(g: GriddedPerm, cell: Cell) -> Iterator[GriddedPerm]:
    """All regriddings of g after splitting cell's row and column in three.

    Entries outside the split row/column shift rigidly; entries in the split
    column pick new columns weakly increasing with index, entries in the
    split row pick new rows weakly increasing with value, so every output is
    a consistent gridding and all of them are produced.
    """
    cx, cy = cell
    n = len(g)
    col_entries = [i for i in range(n) if g.positions[i][0] == cx]
    row_entries = sorted(
        (i for i in range(n) if g.positions[i][1] == cy), key=lambda i: g.pattern[i]
    )
    base_x = [x if x < cx else x + 2 for x, _ in g.positions]
    base_y = [y if y < cy else y + 2 for _, y in g.positions]
    spread = (0, 1, 2)
    for xs in _weakly_increasing(len(col_entries), spread):
        for ys in _weakly_increasing(len(row_entries), spread):
            newx = base_x[:]
            for i, off in zip(col_entries, xs):
                newx[i] = cx + off
            newy = base_y[:]
            for i, off in zip(row_entries, ys):
                newy[i] = cy + off
            yield GriddedPerm(g.pattern, zip(newx, newy))


def point_multiplex(g: GriddedPerm, cell: Cell, idx: int) -> GriddedPerm:
    """The unique multiplex isolating entry ``idx`` (which lies in cell)."""
    cx, cy = cell
    value = g.pattern[idx]

    def place(i: int) -> Cell:
        x, y = g.positions[i]
        if x < cx:
            nx = x
        elif x > cx:
            nx = x + 2
        else:
            nx = cx + (0 if i < idx else 1 if i == idx else 2)
        if y < cy:
            ny = y
        elif y > cy:
            ny = y + 2
        else:
            ny = cy + (0 if g.pattern[i] < value else 1 if i == idx else 2)
        return (nx, ny)

    return GriddedPerm(g.pattern, (place(i) for i in range(len(g))))


def point_placement(
    tiling: Tiling, list_index: int, idx: int, direction: str
) -> Tiling:
    """The placed tiling (uncanonicalized); see the module docstring.

    ``list_index`` selects a singleton requirement list of the tiling and
    ``idx`` an entry of its pattern; ``direction`` is one of DIRECTIONS.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    lst = tiling.requirements[list_index]
    if len(lst) != 1:
        raise ValueError("point placement needs a singleton requirement list")
    placed = lst[0]
    cx, cy = placed.positions[idx]
    t, u = tiling.dims
    center = (cx + 1, cy + 1)

    point_obs = [
        GriddedPerm.localized((0, 1), center),
        GriddedPerm.localized((1, 0), center),
    ]
    # the placed point's row and column hold nothing else
    for x in range(t + 2):
        if x != center[0]:
            point_obs.append(GriddedPerm.point((x, cy + 1)))
    for y in range(u + 2):
        if y != center[1]:
            point_obs.append(GriddedPerm.point((cx + 1, y)))

    # forbid any occurrence of the placed pattern whose placed entry lies
    # beyond the center in the chosen direction
    beyond = {
        "left": lambda c: c[0] < center[0],
        "right": lambda c: c[0] > center[0],
        "down": lambda c: c[1] < center[1],
        "up": lambda c: c[1] > center[1],
    }[direction]
    extremal = [
        m for m in multiplexes(placed, (cx, cy)) if beyond(m.positions[idx])
    ]

    dead = {g.positions[0] for g in point_obs if len(g) == 1}
    dead |= {m.positions[0] for m in extremal if len(m) == 1}

    def live_multiplexes(g: GriddedPerm) -> Iterator[GriddedPerm]:
        # multiplexes touching a dead cell or doubling up on the center are
        # dominated by the point obstructions; skip them early
        for m in multiplexes(g, (cx, cy)):
            if any(p in dead for p in m.positions):
                continue
            if sum(1 for p in m.positions if p == center) > 1:
                continue
            yield m

    obstructions = list(point_obs) + extremal
    for g in tiling.obstructions:
        obstructions.extend(live_multiplexes(g))

    requirements = [[GriddedPerm.point(center)], [point_multiplex(placed, (cx, cy), idx)]]
    for j, other in enumerate(tiling.requirements):
        if j == list_index:
            continue
        members = [m for r in other for m in live_multiplexes(r)]
        if not members:
            raise AssertionError("requirement list lost all members in placement")
        requirements.append(members)

    return Tiling((t + 2, u + 2), obstructions, requirements)


def placement_factory():
    """Expansion strategy: place every entry of every singleton requirement
    list in all four directions."""

    def apply(tiling: Tiling) -> Iterator[Candidate]:
        for li, lst in enumerate(tiling.requirements):
            if len(lst) != 1:
                continue
            for idx in range(len(lst[0])):
                for direction in DIRECTIONS:
                    child = point_placement(tiling, li, idx, direction)
                    yield Candidate(
                        name=f"point_pl:{direction},{idx + 1}",
                        children=(child,),
                        kernel=Equivalence(),
                    )

    return apply
