from combseek.tilings.griddedperm import Cell, GriddedPerm
from combseek.tilings.tiling import Tiling, basis_to_root_tiling

__all__ = ["Cell", "GriddedPerm", "Tiling", "basis_to_root_tiling"]
