"""
Solve reports shared by the pipeline commands
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from hypermatch.core.instances import IntegralSolution
from hypermatch.shared.constants import Algorithm


@dataclass(frozen=True)
class SolveReport:
    """
    Outcome of one pipeline run.

    The certified ratio is always recomputed from lp_value and best_value.
    """
    algorithm: Algorithm
    lp_value: Fraction
    alpha: Optional[Fraction]
    term_count: int
    best_value: Fraction
    bound: Fraction
    solution: Optional[IntegralSolution] = None
    ilp_value: Optional[Fraction] = None
    wall_time: Optional[float] = None

    @property
    def certified_ratio(self) -> Optional[Fraction]:
        """LP / best, 1 when both are zero, None when only best is zero"""
        if self.best_value == 0:
            return Fraction(1) if self.lp_value == 0 else None
        return Fraction(self.lp_value) / Fraction(self.best_value)

    @property
    def within_bound(self) -> bool:
        ratio = self.certified_ratio
        return ratio is not None and ratio <= self.bound
