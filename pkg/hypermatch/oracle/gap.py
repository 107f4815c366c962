"""
Exact integrality gaps and decomposition ratios
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from hypermatch.core.instances import DemandInstance, validate
from hypermatch.core.parameters import effective_k
from hypermatch.local_ratio.hdm import hdm
from hypermatch.lp.program import build_demand_lp
from hypermatch.lp.simplex import solve_to_vertex
from hypermatch.oracle.brute_force import brute_force
from hypermatch.oracle.geometry import gen_projective_plane, gen_truncated_plane
from hypermatch.packing.combination import best_term
from hypermatch.packing.hbm import decompose
from hypermatch.shared.constants import Algorithm, GeneratorFamily
from hypermatch.shared.errors import InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GapReport:
    """
    LP and ILP optima of one instance, with the ratio the algorithm certified

    decomposition_ratio is LP / best-term weight (LP / w(F) for demand
    matching); bound is rho (2k for demand matching).
    """
    algorithm: Algorithm
    lp_value: Fraction
    ilp_value: Fraction
    best_value: Fraction
    bound: Fraction

    @property
    def gap(self) -> Optional[Fraction]:
        """lp / ilp, 1 when both are 0, None when only ilp is 0"""
        return _ratio(self.lp_value, self.ilp_value)

    @property
    def decomposition_ratio(self) -> Optional[Fraction]:
        return _ratio(self.lp_value, self.best_value)


def _ratio(top: Fraction, bottom: Fraction) -> Optional[Fraction]:
    if bottom == 0:
        return Fraction(1) if top == 0 else None
    return Fraction(top) / Fraction(bottom)


def integrality_gap(instance, budget: Optional[int] = None) -> GapReport:
    """
    Exact LP, exact ILP (brute force) and the algorithm's certified ratio

    b-matching instances go through decompose; demand instances through hdm.

    Raises:
        BudgetExceededError: brute force above the budget
        InvariantViolation: best <= ILP <= LP or the ratio bound fails
    """
    instance = validate(instance)
    ilp_value, _ = brute_force(instance, budget)
    if isinstance(instance, DemandInstance):
        lp_value = solve_to_vertex(build_demand_lp(instance)).value
        solution, _ = hdm(instance)
        best_value = solution.weight(instance.w)
        report = GapReport(Algorithm.HDM, lp_value, ilp_value, best_value,
                           Fraction(2 * effective_k(instance.hypergraph, False)))
    else:
        lp_result, comb = decompose(instance)
        _, best_value = best_term(comb, instance.w)
        report = GapReport(Algorithm.HBM, lp_result.value, ilp_value, best_value, comb.alpha)

    if not report.best_value <= report.ilp_value <= report.lp_value:
        raise InvariantViolation("Sandwich best <= ILP <= LP failed",
                                 state={'lp': str(report.lp_value), 'ilp': str(report.ilp_value),
                                        'best': str(report.best_value)})
    ratio = report.decomposition_ratio
    if ratio is None or ratio > report.bound:
        raise InvariantViolation(f"Certified ratio {ratio} exceeds bound {report.bound}",
                                 state={'lp': str(report.lp_value), 'best': str(report.best_value)})
    logger.info("gap: LP=%s ILP=%s gap=%s ratio=%s", report.lp_value, report.ilp_value,
                report.gap, ratio)
    return report


def generate(family: GeneratorFamily, q: int):
    if family is GeneratorFamily.PG:
        return gen_projective_plane(q)
    return gen_truncated_plane(q)


def family_gaps(family: GeneratorFamily, qs: Iterable[int],
                budget: Optional[int] = None) -> List[Tuple[int, GapReport]]:
    """integrality_gap over a generator family for several orders q"""
    return [(q, integrality_gap(generate(family, q), budget)) for q in qs]
