"""Hypergeometric harmonic close-to-convex maps and their minimal-surface lifts."""

from .grid import GridSpec
from .mapping import ConstructionParams, HarmonicMap, build_map, build_t1_map, build_t2_map
from .specfun import PowerSeries, beta, hyp2f1_coeffs, pochhammer

__all__ = [
    "ConstructionParams",
    "GridSpec",
    "HarmonicMap",
    "PowerSeries",
    "beta",
    "build_map",
    "build_t1_map",
    "build_t2_map",
    "hyp2f1_coeffs",
    "pochhammer",
]

__version__ = "0.1.0"
