"""
Exception hierarchy
"""
from typing import Any, Dict, Optional


class HypermatchError(Exception):
    """Base class for all package errors"""


class ParseError(HypermatchError):
    """Malformed document or rational literal"""


class ValidationError(HypermatchError, ValueError):
    """Instance or argument violates a documented invariant"""

    def __init__(self, message: str, edge: Optional[int] = None,
                 vertex: Optional[int] = None):
        super().__init__(message)
        self.edge = edge
        self.vertex = vertex


class BudgetExceededError(HypermatchError):
    """Brute-force search space larger than the configured budget"""

    def __init__(self, size: int, budget: int):
        super().__init__(f"Search space {size} exceeds budget {budget}")
        self.size = size
        self.budget = budget


class InvariantViolation(HypermatchError, AssertionError):
    """An internal guarantee was broken; `state` holds a dump for diagnosis"""

    def __init__(self, message: str, state: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.state = state or {}


class InsufficientMassError(InvariantViolation):
    """Packing step found less packable lambda-mass than requested"""


class EmptyCombinationError(HypermatchError, ValueError):
    """Operation needs at least one term"""
