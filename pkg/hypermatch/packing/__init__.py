"""
Iterated packing: alpha-convex combinations and Algorithm HbM

Components:
    AlphaConvexCombination: weighted integral solutions with sum lambda = alpha
    packing_step / modified_packing_step: move an edge's mass into terms
    hbm_core: rho-convex combination for a fractional simple solution
    decompose: LP vertex -> rho-convex combination of feasible b-matchings
    caratheodory_prune: shrink a finished combination to |E| + 1 terms
"""

from .combination import (
    Term,
    AlphaConvexCombination,
    trivial_combination,
    split_term,
    merge_identical,
    pack_into,
    packing_step,
    has_packing_room,
    best_term,
    expected_value,
    sample_index,
    sample_term,
)
from .context import PackingContext, check_step_conditions, recomposition_ok, term_degrees
from .modified_packing import modified_packing_step
from .caratheodory import caratheodory_prune
from .hbm import Decomposition, hbm_core, decompose

__all__ = [
    'Term',
    'AlphaConvexCombination',
    'trivial_combination',
    'split_term',
    'merge_identical',
    'pack_into',
    'packing_step',
    'has_packing_room',
    'best_term',
    'expected_value',
    'sample_index',
    'sample_term',
    'PackingContext',
    'check_step_conditions',
    'recomposition_ok',
    'term_degrees',
    'modified_packing_step',
    'caratheodory_prune',
    'Decomposition',
    'hbm_core',
    'decompose',
]
