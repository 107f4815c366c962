"""
Exact LP relaxations

Components:
    LinearProgram: rational rows, right-hand sides and box bounds
    build_bmatch_lp / build_demand_lp: the naive relaxations
    solve_to_vertex: Bland-rule simplex returning a certified vertex
    fractional_support_split: integer part / fractional part / support
"""

from .program import LinearProgram, build_bmatch_lp, build_demand_lp, build_lp
from .simplex import LpResult, SimplexTableau, solve_to_vertex
from .support import fractional_support_split, residual_instance

__all__ = [
    'LinearProgram',
    'build_bmatch_lp',
    'build_demand_lp',
    'build_lp',
    'LpResult',
    'SimplexTableau',
    'solve_to_vertex',
    'fractional_support_split',
    'residual_instance',
]


def solve_relaxation(instance):
    """Build and solve the naive relaxation of a validated instance"""
    return solve_to_vertex(build_lp(instance))


__all__.append('solve_relaxation')
