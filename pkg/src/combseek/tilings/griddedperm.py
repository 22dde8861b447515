"""Gridded permutations: a permutation plus a cell for each entry."""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

from combseek.perms import standardize

Cell = tuple[int, int]


class GriddedPerm:
    """An immutable gridded permutation ``(pattern, positions)``.

    ``pattern`` is a permutation of 0..n-1 and ``positions[i]`` is the cell
    (x, y) holding entry i. Positions must be consistent with the pattern:
    x-coordinates weakly increase with index and y-coordinates weakly increase
    with value.
    """

    __slots__ = ("pattern", "positions", "_hash", "_ccount")

    def __init__(self, pattern: Iterable[int], positions: Iterable[Cell]):
        self.pattern = tuple(pattern)
        self.positions = tuple((int(x), int(y)) for x, y in positions)
        if len(self.pattern) != len(self.positions):
            raise ValueError("pattern and positions must have equal length")
        self._hash = hash((self.pattern, self.positions))
        self._ccount: dict | None = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def localized(cls, pattern: Iterable[int], cell: Cell) -> "GriddedPerm":
        """All entries in one cell, e.g. the obstruction (132, (0,0))."""
        patt = tuple(pattern)
        return cls(patt, (cell,) * len(patt))

    @classmethod
    def point(cls, cell: Cell) -> "GriddedPerm":
        return cls((0,), (cell,))

    @classmethod
    def empty(cls) -> "GriddedPerm":
        return cls((), ())

    # -- basic structure -------------------------------------------------------

    def __len__(self) -> int:
        return len(self.pattern)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GriddedPerm):
            return NotImplemented
        return self.pattern == other.pattern and self.positions == other.positions

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"GriddedPerm({self.pattern!r}, {self.positions!r})"

    def key(self) -> tuple:
        """Total order: (size, pattern, positions)."""
        return (len(self.pattern), self.pattern, self.positions)

    def __lt__(self, other: "GriddedPerm") -> bool:
        return self.key() < other.key()

    def is_valid(self) -> bool:
        """Check the pattern/position consistency condition."""
        patt, pos = self.pattern, self.positions
        if sorted(patt) != list(range(len(patt))):
            return False
        for i in range(len(patt)):
            for j in range(i + 1, len(patt)):
                if pos[i][0] > pos[j][0]:
                    return False
                if patt[i] < patt[j]:
                    if pos[i][1] > pos[j][1]:
                        return False
                elif pos[i][1] < pos[j][1]:
                    return False
        return True

    def cells(self) -> frozenset[Cell]:
        return frozenset(self.positions)

    def cell_counts(self) -> dict[Cell, int]:
        if self._ccount is None:
            counts: dict[Cell, int] = {}
            for c in self.positions:
                counts[c] = counts.get(c, 0) + 1
            self._ccount = counts
        return self._ccount

    def in_bounds(self, dims: tuple[int, int]) -> bool:
        t, u = dims
        return all(0 <= x < t and 0 <= y < u for x, y in self.positions)

    # -- containment -----------------------------------------------------------

    def occurrences(self, patt: "GriddedPerm") -> Iterator[tuple[int, ...]]:
        """Index tuples where ``patt`` occurs in ``self``.

        An occurrence is a subsequence whose standardization equals
        patt.pattern and whose cells equal patt.positions entrywise (cells are
        never standardized).
        """
        k = len(patt)
        if k == 0:
            yield ()
            return
        n = len(self)
        if k > n:
            return
        spat, spos = self.pattern, self.positions
        ppat, ppos = patt.pattern, patt.positions
        chosen: list[int] = []

        def extend(depth: int, start: int) -> Iterator[tuple[int, ...]]:
            if depth == k:
                yield tuple(chosen)
                return
            want_cell = ppos[depth]
            for i in range(start, n - (k - depth) + 1):
                if spos[i] != want_cell:
                    continue
                ok = True
                for d, j in enumerate(chosen):
                    if (spat[j] < spat[i]) != (ppat[d] < ppat[depth]):
                        ok = False
                        break
                if ok:
                    chosen.append(i)
                    yield from extend(depth + 1, i + 1)
                    chosen.pop()

        yield from extend(0, 0)

    def contains(self, patt: "GriddedPerm") -> bool:
        return next(self.occurrences(patt), None) is not None

    def avoids(self, patt: "GriddedPerm") -> bool:
        return not self.contains(patt)

    def contains_using_index(self, patt: "GriddedPerm", index: int) -> bool:
        """Containment where some entry of the occurrence is ``index``."""
        for occ in self.occurrences(patt):
            if index in occ:
                return True
        return False

    # -- derived gridded permutations -------------------------------------------

    def subperm(self, indices: Iterable[int]) -> "GriddedPerm":
        """The gridded subpermutation at the given (sorted) indices."""
        idxs = sorted(indices)
        return GriddedPerm(
            standardize(self.pattern[i] for i in idxs),
            (self.positions[i] for i in idxs),
        )

    def restricted_to_cells(self, cells: Iterable[Cell]) -> "GriddedPerm":
        cs = set(cells)
        return self.subperm(i for i, p in enumerate(self.positions) if p in cs)

    def remove_indices(self, indices: Iterable[int]) -> "GriddedPerm":
        drop = set(indices)
        return self.subperm(i for i in range(len(self)) if i not in drop)

    def apply_cell_map(self, f: Callable[[Cell], Cell]) -> "GriddedPerm":
        return GriddedPerm(self.pattern, (f(c) for c in self.positions))

    def transpose(self) -> "GriddedPerm":
        """Reflect across the main diagonal (swap index/value and x/y)."""
        n = len(self)
        inv = [0] * n
        for i, v in enumerate(self.pattern):
            inv[v] = i
        return GriddedPerm(
            standardize(inv),
            ((self.positions[inv[v]][1], self.positions[inv[v]][0]) for v in range(n)),
        )

    # -- text encoding -----------------------------------------------------------

    def encode(self) -> str:
        """Encode as "pattern|x0,y0;x1,y1;..." with 1-indexed pattern digits."""
        if len(self) > 9:
            raise ValueError("text encoding supports sizes <= 9")
        patt = "".join(str(v + 1) for v in self.pattern)
        cells = ";".join(f"{x},{y}" for x, y in self.positions)
        return f"{patt}|{cells}"

    @classmethod
    def decode(cls, text: str) -> "GriddedPerm":
        patt_part, _, cell_part = text.partition("|")
        pattern = tuple(int(ch) - 1 for ch in patt_part)
        positions = []
        if cell_part:
            for chunk in cell_part.split(";"):
                x, y = chunk.split(",")
                positions.append((int(x), int(y)))
        g = cls(pattern, positions)
        if not g.is_valid():
            raise ValueError(f"inconsistent gridded permutation: {text!r}")
        return g
