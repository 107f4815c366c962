"""
Local-ratio demand matching

Components:
    what_weights: the w-hat vector of the minimum-demand edge
    hdm: recursive weight decomposition returning a feasible edge set
    WeightDecompositionTrace: per-level record with telescoping checks
"""

from .trace import TraceLevel, WeightDecompositionTrace, check_weight_bounds, feasible_subsets
from .hdm import what_weights, hdm

__all__ = [
    'TraceLevel',
    'WeightDecompositionTrace',
    'check_weight_bounds',
    'feasible_subsets',
    'what_weights',
    'hdm',
]
