"""Archimedean tilings, periodic lattices and ray labelings."""

from .labeling import (
    Labeling,
    canonical_assignments,
    canonicalize_letters,
    count_orbit_representatives,
    enumerate_labelings,
    is_orbit_representative,
    labeling_from_ordinal,
    labeling_to_measurements,
    orbit_representatives,
    parse_labeling,
    rotate_labeling,
    total_labelings,
)
from .periodic import PeriodicLattice, build_lattice
from .tiling import SCANNED_TILINGS, TILING_NAMES, TilingDataError, TilingSpec, load_tiling, load_tiling_file

__all__ = [
    "TilingSpec",
    "TilingDataError",
    "TILING_NAMES",
    "SCANNED_TILINGS",
    "load_tiling",
    "load_tiling_file",
    "PeriodicLattice",
    "build_lattice",
    "Labeling",
    "canonical_assignments",
    "canonicalize_letters",
    "total_labelings",
    "enumerate_labelings",
    "labeling_from_ordinal",
    "parse_labeling",
    "rotate_labeling",
    "is_orbit_representative",
    "orbit_representatives",
    "count_orbit_representatives",
    "labeling_to_measurements",
]
