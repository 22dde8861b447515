"""Knobs bounding which strategy applications are attempted."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CandidatePolicy:
    """Candidate generation bounds for the tiling strategies.

    max_req_insert_len: longest localized pattern offered to requirement
    insertion. allow_crossing_insertions: also offer patterns spanning
    several cells. obs_inferral_max_len: longest pattern tried by the
    emptiness-based obstruction inferral.
    """

    max_req_insert_len: int = 2
    allow_crossing_insertions: bool = False
    obs_inferral_max_len: int = 3

    def __post_init__(self):
        if self.max_req_insert_len < 1 or self.obs_inferral_max_len < 1:
            raise ValueError("policy bounds must be positive")
