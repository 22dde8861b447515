from combseek.transfer.counting import (
    CycleDetected,
    OpCounter,
    ProductivityReport,
    audit_productivity,
    count_terms,
    count_terms_all,
)
from combseek.transfer.gfsystem import GFSystem, emit_gf_system, isomorphic
from combseek.transfer.series import NonConvergent, solve_series

__all__ = [
    "CycleDetected",
    "OpCounter",
    "ProductivityReport",
    "audit_productivity",
    "count_terms",
    "count_terms_all",
    "GFSystem",
    "emit_gf_system",
    "isomorphic",
    "NonConvergent",
    "solve_series",
]
