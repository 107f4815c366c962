"""
Shared utilities and configuration for hypermatch

This module provides:
- Configuration classes for global defaults and random verification suites
- Constants and enumerations for document kinds, algorithms and exit codes
- The exception hierarchy mapped to CLI exit codes
- Exact rational helpers (rank, nullspace, ceilings)
- The JSON document dialect used by every command
"""

from .config import Config, SuiteConfig, get_suite_config
from .constants import (
    InstanceKind,
    Algorithm,
    GeneratorFamily,
    ExitCode,
    UNBOUNDED,
)
from .errors import (
    HypermatchError,
    ParseError,
    ValidationError,
    BudgetExceededError,
    InvariantViolation,
    InsufficientMassError,
    EmptyCombinationError,
)
from .utils import (
    as_fraction,
    frac_part,
    ceil_int,
    is_integral,
    dot,
    exact_rank,
    exact_nullspace,
)
from .communication import Document, parse_rational, format_rational

__all__ = [
    # Configuration
    'Config',
    'SuiteConfig',
    'get_suite_config',

    # Constants and Enums
    'InstanceKind',
    'Algorithm',
    'GeneratorFamily',
    'ExitCode',
    'UNBOUNDED',

    # Errors
    'HypermatchError',
    'ParseError',
    'ValidationError',
    'BudgetExceededError',
    'InvariantViolation',
    'InsufficientMassError',
    'EmptyCombinationError',

    # Rational helpers
    'as_fraction',
    'frac_part',
    'ceil_int',
    'is_integral',
    'dot',
    'exact_rank',
    'exact_nullspace',

    # Document dialect
    'Document',
    'parse_rational',
    'format_rational',
]
