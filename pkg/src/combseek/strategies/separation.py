"""Row and column separation.

When the crossing obstructions of a tiling force every entry of some cells
in a row to lie below every entry of the row's other cells, the row can be
split in two. The licensing obstructions are the critical row patterns: for
cells c in the lower group and c' in the upper group, (21, (c, c')) when c
is left of c' and (12, (c', c)) when c is right of c'. The cell map that
performs the split is a bijection on gridded permutations, so separation is
an equivalence. Column separation is the same strategy on the transposed
tiling.
"""

from __future__ import annotations

from itertools import combinations

from combseek.engine.explorer import Candidate
from combseek.engine.kernels import Equivalence
from combseek.tilings.griddedperm import Cell, GriddedPerm
from combseek.tilings.tiling import Tiling


def _critical_patterns(lower: Cell, upper: Cell) -> GriddedPerm:
    """The obstruction forcing every entry of ``lower`` below ``upper``."""
    if lower[0] < upper[0]:
        return GriddedPerm((1, 0), (lower, upper))
    return GriddedPerm((0, 1), (upper, lower))


def _find_split(tiling: Tiling, row: int) -> tuple[int, ...] | None:
    """Columns of a valid lower group S, preferring small groups of small
    cells; None when the row cannot be separated."""
    obs = set(tiling.obstructions)
    cells = sorted(c for c in tiling.nonempty_cells() if c[1] == row)
    if len(cells) < 2:
        return None
    for size in range(1, len(cells)):
        for group in combinations(cells, size):
            rest = [c for c in cells if c not in group]
            if all(
                _critical_patterns(c, cp) in obs for c in group for cp in rest
            ):
                return tuple(x for x, _ in group)
    return None


def separate_row(tiling: Tiling, row: int, lower_cols: tuple[int, ...]) -> Tiling:
    """Split ``row``: the cells in ``lower_cols`` keep the row, the rest move
    one row up; higher rows shift. Critical patterns are consumed by the
    split and empty cells mark the vacated halves."""
    t, u = tiling.dims
    lower = set(lower_cols)

    def cellmap(c: Cell) -> Cell:
        x, y = c
        if y < row or (y == row and x in lower):
            return (x, y)
        return (x, y + 1)

    upper_cells = [c for c in tiling.nonempty_cells() if c[1] == row and c[0] not in lower]
    critical = {
        _critical_patterns((x, row), cp) for x in lower_cols for cp in upper_cells
    }
    obstructions = [
        g.apply_cell_map(cellmap) for g in tiling.obstructions if g not in critical
    ]
    obstructions.extend(
        GriddedPerm.point((x, row)) for x in range(t) if x not in lower
    )
    obstructions.extend(GriddedPerm.point((x, row + 1)) for x in sorted(lower))
    requirements = [
        [r.apply_cell_map(cellmap) for r in lst] for lst in tiling.requirements
    ]
    return Tiling((t, u + 1), obstructions, requirements)


def row_separation(tiling: Tiling) -> Candidate | None:
    for row in range(tiling.dims[1]):
        cols = _find_split(tiling, row)
        if cols is not None:
            child = separate_row(tiling, row, cols)
            name = "row_sep:{},{{{}}}".format(row, ",".join(map(str, cols)))
            return Candidate(name=name, children=(child,), kernel=Equivalence())
    return None


def col_separation(tiling: Tiling) -> Candidate | None:
    """Row separation of the transpose, transposed back."""
    flipped = tiling.transpose()
    for col in range(tiling.dims[0]):
        rows = _find_split(flipped, col)
        if rows is not None:
            child = separate_row(flipped, col, rows).transpose()
            name = "col_sep:{},{{{}}}".format(col, ",".join(map(str, rows)))
            return Candidate(name=name, children=(child,), kernel=Equivalence())
    return None
