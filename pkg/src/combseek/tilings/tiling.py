"""Tilings: finite descriptions of sets of gridded permutations.

A tiling is a grid of dimensions (t, u) together with obstructions (gridded
patterns none of which may occur) and requirement lists (from each list, at
least one pattern must occur). Grid(T) denotes the represented set.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from combseek import perms
from combseek.tilings.griddedperm import Cell, GriddedPerm

ReqList = tuple[GriddedPerm, ...]


def _maybe_contains(g: GriddedPerm, h: GriddedPerm) -> bool:
    """Cheap necessary condition for h <= g: cell multiset inclusion."""
    if len(h) > len(g):
        return False
    gc = g.cell_counts()
    return all(gc.get(c, 0) >= k for c, k in h.cell_counts().items())


def _minimal(perms_set: Iterable[GriddedPerm]) -> set[GriddedPerm]:
    """Keep only containment-minimal elements."""
    items = sorted(set(perms_set), key=GriddedPerm.key)
    kept: list[GriddedPerm] = []
    for g in items:
        if not any(_maybe_contains(g, h) and g.contains(h) for h in kept):
            kept.append(g)
    return set(kept)


def _list_key(lst: Iterable[GriddedPerm]) -> tuple:
    return tuple(sorted(g.key() for g in lst))


def _entry_components(g: GriddedPerm) -> list[GriddedPerm]:
    """Split g into subperms whose cells share no row or column across parts.

    Entries are grouped by the transitive closure of "same row or same
    column"; the relative order of entries in different parts is then fully
    determined by their cells, so a gridded permutation contains g exactly
    when it contains every part.
    """
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
    return [g.subperm(idxs) for idxs in groups.values()]


_AVOIDER_CACHE: dict[tuple, list[list[GriddedPerm]]] = {}
_MEMBER_CACHE: dict[tuple, list[list[GriddedPerm]]] = {}
_CANON_CACHE: dict["Tiling", "Tiling"] = {}


def clear_enumeration_caches() -> None:
    _AVOIDER_CACHE.clear()
    _MEMBER_CACHE.clear()
    _CANON_CACHE.clear()


def _occurs_through(
    spat: tuple[int, ...],
    spos: tuple,
    ppat: tuple[int, ...],
    ppos: tuple,
    forced: int,
) -> bool:
    """Does (ppat, ppos) occur in (spat, spos) using the entry ``forced``?

    Tight backtracking on raw tuples; the hot path of avoider extension.
    """
    k = len(ppat)
    n = len(spat)
    chosen: list[int] = []

    def extend(depth: int, start: int, used: bool) -> bool:
        if depth == k:
            return used
        if not used and start > forced:
            return False
        want = ppos[depth]
        pd = ppat[depth]
        for i in range(start, n - (k - depth) + 1):
            if not used and i > forced:
                break
            if spos[i] != want:
                continue
            si = spat[i]
            ok = True
            for d, j in enumerate(chosen):
                if (spat[j] < si) != (ppat[d] < pd):
                    ok = False
                    break
            if ok:
                chosen.append(i)
                if extend(depth + 1, i + 1, used or i == forced):
                    return True
                chosen.pop()
        return False

    return extend(0, 0, False)


class Tiling:
    """Immutable tiling value; see module docstring.

    The constructor normalizes lightly (dedup + sort + validation) but does
    not simplify; :meth:`canonicalize` produces the canonical representative
    used for labeling.
    """

    __slots__ = ("dims", "obstructions", "requirements", "_hash")

    def __init__(
        self,
        dims: tuple[int, int],
        obstructions: Iterable[GriddedPerm] = (),
        requirements: Iterable[Iterable[GriddedPerm]] = (),
    ):
        t, u = dims
        if t < 1 or u < 1:
            raise ValueError("tiling dimensions must be at least 1x1")
        self.dims = (t, u)
        obs = sorted(set(obstructions), key=GriddedPerm.key)
        reqs = []
        for lst in requirements:
            lst = tuple(sorted(set(lst), key=GriddedPerm.key))
            if not lst:
                raise ValueError("requirement lists must be non-empty")
            reqs.append(lst)
        reqs = sorted(set(reqs), key=_list_key)
        for g in obs + [r for lst in reqs for r in lst]:
            if not g.is_valid():
                raise ValueError(f"inconsistent gridded permutation {g!r}")
            if not g.in_bounds(self.dims):
                raise ValueError(f"{g!r} out of bounds for dims {self.dims}")
        self.obstructions: tuple[GriddedPerm, ...] = tuple(obs)
        self.requirements: tuple[ReqList, ...] = tuple(reqs)
        self._hash = hash((self.dims, self.obstructions, self.requirements))

    # -- value semantics --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return (
            self.dims == other.dims
            and self.obstructions == other.obstructions
            and self.requirements == other.requirements
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tiling.decode({self.encode()!r})"

    # -- cell structure ----------------------------------------------------------

    def empty_cells(self) -> set[Cell]:
        return {g.positions[0] for g in self.obstructions if len(g) == 1}

    def nonempty_cells(self) -> list[Cell]:
        t, u = self.dims
        empty = self.empty_cells()
        return [(x, y) for x in range(t) for y in range(u) if (x, y) not in empty]

    def point_cells(self) -> set[Cell]:
        """Cells forced to hold exactly one entry."""
        obs = set(self.obstructions)
        cells = set()
        for lst in self.requirements:
            if len(lst) == 1 and len(lst[0]) == 1:
                c = lst[0].positions[0]
                asc = GriddedPerm.localized((0, 1), c)
                desc = GriddedPerm.localized((1, 0), c)
                if asc in obs and desc in obs:
                    cells.add(c)
        return cells

    # -- membership and enumeration ----------------------------------------------

    def _satisfies_requirements(self, g: GriddedPerm) -> bool:
        return all(any(g.contains(r) for r in lst) for lst in self.requirements)

    def grid_member(self, g: GriddedPerm) -> bool:
        """True when g lies in Grid(self)."""
        if not g.in_bounds(self.dims):
            return False
        if any(_maybe_contains(g, o) and g.contains(o) for o in self.obstructions):
            return False
        return self._satisfies_requirements(g)

    def _avoider_levels(self, n: int) -> list[list[GriddedPerm]]:
        """Obstruction-avoiding gridded permutations, by size, up to size n.

        Every avoider of size k arises uniquely from an avoider of size k-1
        by inserting a new maximum entry, so each level is built from the
        previous one; only occurrences through the new entry are checked.
        Levels depend on the obstructions alone and are shared between
        tilings with equal dimensions and obstruction sets.
        """
        key = (self.dims, self.obstructions)
        levels = _AVOIDER_CACHE.get(key)
        if levels is None:
            empty_ok = not any(len(o) == 0 for o in self.obstructions)
            levels = [[GriddedPerm.empty()]] if empty_ok else [[]]
            _AVOIDER_CACHE[key] = levels
        t, u = self.dims
        raw_obs = [
            (o.pattern, o.positions, o.cell_counts())
            for o in self.obstructions
            if len(o) >= 1
        ]
        while len(levels) <= n:
            k = len(levels)  # size being built
            nxt: list[GriddedPerm] = []
            usable = [(p, q, cc) for p, q, cc in raw_obs if len(p) <= k]
            for g in levels[k - 1]:
                pos = g.positions
                patt = g.pattern
                gcount = g.cell_counts()
                max_y = max((y for _, y in pos), default=0)
                for idx in range(k):
                    lo = pos[idx - 1][0] if idx > 0 else 0
                    hi = pos[idx][0] if idx < k - 1 else t - 1
                    new_patt = patt[:idx] + (k - 1,) + patt[idx:]
                    for x in range(lo, hi + 1):
                        for y in range(max_y, u):
                            cell = (x, y)
                            new_pos = pos[:idx] + (cell,) + pos[idx:]
                            hit = False
                            for p, q, cc in usable:
                                if cell not in cc:
                                    continue
                                ok = True
                                for oc, need in cc.items():
                                    have = gcount.get(oc, 0) + (oc == cell)
                                    if have < need:
                                        ok = False
                                        break
                                if ok and _occurs_through(new_patt, new_pos, p, q, idx):
                                    hit = True
                                    break
                            if not hit:
                                nxt.append(GriddedPerm(new_patt, new_pos))
            levels.append(nxt)
        return levels

    def avoiders_of_size(self, n: int) -> list[GriddedPerm]:
        """Size-n gridded perms avoiding the obstructions (requirements ignored)."""
        return self._avoider_levels(n)[n]

    def gridded_perms_of_size(self, n: int) -> list[GriddedPerm]:
        """Exactly Grid_n(self); intended for small n."""
        key = (self.dims, self.obstructions, self.requirements)
        members = _MEMBER_CACHE.setdefault(key, [])
        while len(members) <= n:
            size = len(members)
            members.append(
                [g for g in self._avoider_levels(size)[size] if self._satisfies_requirements(g)]
            )
        return members[n]

    def requirement_bound(self) -> int:
        """Size bound L: a nonempty tiling has a member of size at most L."""
        return sum(max(len(r) for r in lst) for lst in self.requirements)

    def is_empty(self) -> bool:
        """Decide Grid(self) == {} by enumeration up to the bound L."""
        for s in range(self.requirement_bound() + 1):
            if any(self._satisfies_requirements(g) for g in self._avoider_levels(s)[s]):
                return False
        return True

    # -- canonical form -----------------------------------------------------------

    def canonicalize(self) -> "Tiling":
        """The canonical tiling representing the same set of gridded perms.

        Applies, to a fixpoint: deletion of non-minimal obstructions, deletion
        of requirement members that contain an obstruction or another member
        of their list, splitting of singleton requirements into independent
        parts, deletion of requirement lists implied by another list, and
        trimming of fully empty rows and columns. Output is sorted; the map
        is idempotent, and Grid is preserved up to the re-indexing done by
        trimming.
        """
        cached = _CANON_CACHE.get(self)
        if cached is not None:
            return cached
        t, u = self.dims
        obs = set(self.obstructions)
        reqs: list[set[GriddedPerm]] = [set(lst) for lst in self.requirements]

        while True:
            if any(len(o) == 0 for o in obs):
                return self._cache_canonical(_void_tiling())
            changed = False

            new_obs = _minimal(obs)
            if new_obs != obs:
                obs, changed = new_obs, True

            # Requirement members: drop any that contain an obstruction (they
            # can never occur) and any containing another member of the same
            # list (the smaller member is the weaker condition).
            new_reqs: list[set[GriddedPerm]] = []
            satisfied_dropped = False
            for lst in reqs:
                kept = {
                    r
                    for r in lst
                    if not any(_maybe_contains(r, o) and r.contains(o) for o in obs)
                }
                if not kept:
                    return self._cache_canonical(_void_tiling())
                if any(len(r) == 0 for r in kept):
                    satisfied_dropped = True  # contains epsilon: always satisfied
                    continue
                kept = _minimal(kept)
                if kept != lst:
                    changed = True
                new_reqs.append(kept)
            if satisfied_dropped:
                changed = True
            reqs = new_reqs

            # Split singleton requirements whose entries fall into independent
            # parts: containing the whole pattern is then equivalent to
            # containing every part.
            split_reqs: list[set[GriddedPerm]] = []
            for lst in reqs:
                if len(lst) == 1:
                    (r,) = lst
                    parts = _entry_components(r)
                    if len(parts) > 1:
                        changed = True
                        split_reqs.extend({p} for p in parts)
                        continue
                split_reqs.append(lst)
            # dedup
            seen: dict[tuple, set[GriddedPerm]] = {}
            for lst in split_reqs:
                seen.setdefault(_list_key(lst), lst)
            if len(seen) != len(split_reqs):
                changed = True
            reqs = list(seen.values())

            if self._drop_implied_lists(reqs):
                changed = True

            trimmed = self._trim(obs, reqs, t, u)
            if trimmed is not None:
                if isinstance(trimmed, Tiling):
                    return self._cache_canonical(trimmed.canonicalize())
                obs, reqs, t, u = trimmed
                changed = True

            if not changed:
                break

        result = Tiling((t, u), obs, reqs)
        _CANON_CACHE[self] = result
        _CANON_CACHE[result] = result
        return result


    def _cache_canonical(self, result: "Tiling") -> "Tiling":
        _CANON_CACHE[self] = result
        _CANON_CACHE[result] = result
        return result

    @staticmethod
    def _drop_implied_lists(reqs: list[set[GriddedPerm]]) -> bool:
        """Delete lists implied by another list (in place); True if changed."""

        def implied(weak: set[GriddedPerm], strong: set[GriddedPerm]) -> bool:
            return all(any(rp.contains(r) for r in weak) for rp in strong)

        changed = False
        i = 0
        while i < len(reqs):
            ri = reqs[i]
            drop = False
            for j, rj in enumerate(reqs):
                if i == j:
                    continue
                if implied(ri, rj):
                    # on mutual implication keep the smaller-keyed list
                    if implied(rj, ri) and _list_key(rj) > _list_key(ri):
                        continue
                    drop = True
                    break
            if drop:
                del reqs[i]
                changed = True
            else:
                i += 1
        return changed

    @staticmethod
    def _trim(
        obs: set[GriddedPerm], reqs: list[set[GriddedPerm]], t: int, u: int
    ):
        """Delete fully empty rows/columns. Returns None when nothing to do,
        a Tiling for the degenerate all-empty case, else (obs, reqs, t, u)."""
        if t == 1 and u == 1:
            return None  # a fully empty 1x1 tiling is the canonical {epsilon}
        empty = {g.positions[0] for g in obs if len(g) == 1}
        empty_cols = [x for x in range(t) if all((x, y) in empty for y in range(u))]
        empty_rows = [y for y in range(u) if all((x, y) in empty for x in range(t))]
        if not empty_cols and not empty_rows:
            return None
        if len(empty_cols) == t or len(empty_rows) == u:
            # nothing can be placed anywhere; requirements were cleaned already
            return _epsilon_tiling()
        colmap = {x: x - sum(1 for c in empty_cols if c < x) for x in range(t)}
        rowmap = {y: y - sum(1 for r in empty_rows if r < y) for y in range(u)}

        def remap(g: GriddedPerm) -> GriddedPerm:
            return g.apply_cell_map(lambda c: (colmap[c[0]], rowmap[c[1]]))

        dead = set(empty_cols)
        deadr = set(empty_rows)
        new_obs = {
            remap(g)
            for g in obs
            if not (len(g) == 1 and (g.positions[0][0] in dead or g.positions[0][1] in deadr))
        }
        new_reqs = [{remap(r) for r in lst} for lst in reqs]
        return (new_obs, new_reqs, t - len(empty_cols), u - len(empty_rows))

    # -- symmetry -------------------------------------------------------------------

    def transpose(self) -> "Tiling":
        """Reflect across the main diagonal; rows and columns swap roles."""
        t, u = self.dims
        return Tiling(
            (u, t),
            (g.transpose() for g in self.obstructions),
            ((r.transpose() for r in lst) for lst in self.requirements),
        )

    # -- text encoding -----------------------------------------------------------------

    def encode(self) -> str:
        """Encode as "t,u # obs;obs # list/list" (lists are ";"-joined perms)."""
        t, u = self.dims
        obs = ";".join(g.encode() for g in self.obstructions)
        reqs = "/".join(";".join(r.encode() for r in lst) for lst in self.requirements)
        return f"{t},{u} # {obs} # {reqs}"

    @classmethod
    def decode(cls, text: str) -> "Tiling":
        dims_part, obs_part, req_part = (s.strip() for s in text.split("#"))
        t, u = (int(v) for v in dims_part.split(","))
        obs = [GriddedPerm.decode(s) for s in _split_perms(obs_part)]
        reqs = []
        for chunk in req_part.split("/"):
            chunk = chunk.strip()
            if chunk:
                reqs.append([GriddedPerm.decode(s) for s in _split_perms(chunk)])
        return cls((t, u), obs, reqs)


def _split_perms(text: str) -> list[str]:
    """Split ";"-joined gridded perms; a new perm starts at each "|" token."""
    if not text:
        return []
    out: list[str] = []
    for token in text.split(";"):
        if "|" in token:
            out.append(token)
        else:
            out[-1] += ";" + token
    return out


def _void_tiling() -> Tiling:
    """Canonical tiling with Grid = {} (everything obstructed)."""
    return Tiling((1, 1), (GriddedPerm.empty(),), ())


def _epsilon_tiling() -> Tiling:
    """Canonical tiling whose only member is the empty gridded permutation."""
    return Tiling((1, 1), (GriddedPerm.point((0, 0)),), ())


def basis_to_root_tiling(basis: Sequence[tuple[int, ...]]) -> Tiling:
    """The 1x1 tiling whose gridded members mirror Av(basis).

    Basis patterns must be non-empty and pairwise incomparable.
    """
    if not basis:
        raise ValueError("empty basis")
    for a in basis:
        for b in basis:
            if a != b and perms.contains(a, b):
                raise perms.RedundantBasis(
                    f"{perms.render_perm(a)} contains {perms.render_perm(b)}"
                )
    if len(set(basis)) != len(basis):
        raise perms.RedundantBasis("repeated basis pattern")
    return Tiling((1, 1), (GriddedPerm.localized(b, (0, 0)) for b in basis))


def enumerate_all_griddings(dims: tuple[int, int], n: int) -> Iterator[GriddedPerm]:
    """Every consistent gridded permutation of size n on the given dimensions.

    Unconstrained population; mainly useful for property checks against the
    counting formula n! * C(t+n-1, t-1) * C(u+n-1, u-1).
    """
    t, u = dims
    from itertools import permutations

    def weakly_increasing(length: int, bound: int) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for first in range(bound):
            for rest in weakly_increasing(length - 1, bound - first):
                yield (first,) + tuple(r + first for r in rest)

    for patt in permutations(range(n)):
        for xs in weakly_increasing(n, t):
            for ys in weakly_increasing(n, u):
                yield GriddedPerm(patt, ((xs[i], ys[patt[i]]) for i in range(n)))
