"""
Ground truth: brute force, finite geometries and integrality gaps

Components:
    brute_force_bmatch / brute_force_demand: exact optima within a budget
    GaloisField, gen_projective_plane, gen_truncated_plane: tight-gap families
    integrality_gap / family_gaps: LP, ILP and certified ratios
    random_* generators, SuiteLogger, run_suite: random verification suites
"""

from .brute_force import brute_force, brute_force_bmatch, brute_force_demand, search_space_size
from .geometry import GaloisField, gen_projective_plane, gen_truncated_plane, projective_points
from .gap import GapReport, integrality_gap, family_gaps, generate
from .random_instances import random_bmatch, random_demand, random_colored, random_auction
from .suite_logger import SuiteLogger
from .suite import run_suite

__all__ = [
    'brute_force',
    'brute_force_bmatch',
    'brute_force_demand',
    'search_space_size',
    'GaloisField',
    'gen_projective_plane',
    'gen_truncated_plane',
    'projective_points',
    'GapReport',
    'integrality_gap',
    'family_gaps',
    'generate',
    'random_bmatch',
    'random_demand',
    'random_colored',
    'random_auction',
    'SuiteLogger',
    'run_suite',
]
