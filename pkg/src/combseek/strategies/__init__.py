"""Strategy factories for the tilings domain.

The default pack wires the strategies into the engine's phases: separations
and obstruction inferral as inferral strategies (their outputs supersede the
parent), factor as the initial strategy, requirement insertion and point
placement as the two expansion subsets, and the monotone recognizers as
verification.
"""

from __future__ import annotations

from combseek.engine.explorer import StrategyPack
from combseek.strategies.factor import factor
from combseek.strategies.inferral import (
    obstruction_inferral,
    obstruction_inferral_case1,
    obstruction_inferral_case2,
)
from combseek.strategies.insertion import insertion_factory, requirement_insertion
from combseek.strategies.placement import placement_factory, point_placement
from combseek.strategies.policy import CandidatePolicy
from combseek.strategies.separation import col_separation, row_separation
from combseek.strategies.verification import (
    verify_atom,
    verify_empty,
    verify_monotone,
)
from combseek.tilings.tiling import Tiling

__all__ = [
    "CandidatePolicy",
    "strategy_factories",
    "requirement_insertion",
    "point_placement",
    "row_separation",
    "col_separation",
    "factor",
    "obstruction_inferral",
    "obstruction_inferral_case1",
    "obstruction_inferral_case2",
    "verify_empty",
    "verify_atom",
    "verify_monotone",
]


def strategy_factories(policy: CandidatePolicy | None = None) -> StrategyPack[Tiling]:
    """The default strategy pack for exploring tilings."""
    policy = policy or CandidatePolicy()
    return StrategyPack(
        name="tilings",
        canonicalize=Tiling.canonicalize,
        inferral=[
            row_separation,
            col_separation,
            obstruction_inferral_case1,
            obstruction_inferral_case2(policy),
        ],
        initial=[factor],
        expansion=[
            [insertion_factory(policy)],
            [placement_factory()],
        ],
        verification=[verify_empty, verify_atom, verify_monotone],
    )
