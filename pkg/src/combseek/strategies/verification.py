"""Verification: recognize tilings whose counting sequence is known outright.

Covered: the empty-permutation tiling, the single-point (atom) tiling, and
generally any 1x1 tiling carrying a length-2 monotone obstruction. For such
a tiling the members are the monotone permutations in the open direction, so
in canonical form the obstructions are a length-2 monotone pattern plus at
most one longer monotone pattern (capping the size), and the requirements
force a minimum size; the terms are 1 on that size window and 0 elsewhere.
"""

from __future__ import annotations

from combseek.engine.kernels import Verified
from combseek.tilings.griddedperm import GriddedPerm
from combseek.tilings.tiling import Tiling

_ASC = (0, 1)
_DESC = (1, 0)


def _is_monotone(pattern: tuple[int, ...], increasing: bool) -> bool:
    if increasing:
        return all(pattern[i] < pattern[i + 1] for i in range(len(pattern) - 1))
    return all(pattern[i] > pattern[i + 1] for i in range(len(pattern) - 1))


def _monotone_window(tiling: Tiling) -> tuple[int, int | None] | None:
    """(min_size, size_cap) of a 1x1 monotone tiling, or None if unrecognized.

    Terms are 1 for min_size <= n < size_cap (cap None = unbounded). Assumes
    the canonical form has been taken.
    """
    if tiling.dims != (1, 1):
        return None
    patterns = [g.pattern for g in tiling.obstructions]
    if () in patterns:
        return (0, 0)  # obstructed entirely; Grid is empty
    if (0,) in patterns:
        return (0, 1)  # only the empty perm survives
    if _ASC in patterns:
        increasing = False  # members avoid 12, so they are decreasing
        defining = _ASC
    elif _DESC in patterns:
        increasing = True
        defining = _DESC
    else:
        return None
    cap: int | None = None
    for patt in patterns:
        if patt == defining:
            continue
        if not _is_monotone(patt, increasing):
            return None  # cannot happen on canonical input; stay safe
        cap = len(patt) if cap is None else min(cap, len(patt))
    forced = 0
    for lst in tiling.requirements:
        if not all(_is_monotone(r.pattern, increasing) for r in lst):
            return None
        forced = max(forced, min(len(r) for r in lst))
    return (forced, cap)


def verify_empty(tiling: Tiling) -> tuple[str, Verified] | None:
    """The tiling whose single member is the empty gridded permutation."""
    if tiling == Tiling((1, 1), (GriddedPerm.point((0, 0)),)):
        return ("verify:empty", Verified.empty_class())
    return None


def verify_atom(tiling: Tiling) -> tuple[str, Verified] | None:
    """The tiling whose single member is the size-1 gridded permutation."""
    atom = Tiling(
        (1, 1),
        (GriddedPerm.localized(_ASC, (0, 0)), GriddedPerm.localized(_DESC, (0, 0))),
        ((GriddedPerm.point((0, 0)),),),
    )
    if tiling == atom:
        return ("verify:atom", Verified.atom())
    return None


def verify_monotone(tiling: Tiling) -> tuple[str, Verified] | None:
    """Any 1x1 tiling whose obstructions include a length-2 monotone pattern."""
    window = _monotone_window(tiling)
    if window is None:
        return None
    lo, hi = window
    return ("verify:monotone", Verified.monotone(lo, hi))
