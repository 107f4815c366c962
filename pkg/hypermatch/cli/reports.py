"""
Machine-readable report bodies with stable key order
"""
from fractions import Fraction
from typing import Any, Dict, Optional

from hypermatch.core.report import SolveReport
from hypermatch.lp.simplex import LpResult
from hypermatch.oracle.gap import GapReport
from hypermatch.reductions.auction import Allocation
from hypermatch.shared.communication import format_rational


def rational(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else format_rational(value)


def ratio(top: Fraction, bottom: Fraction) -> Optional[str]:
    """top / bottom recomputed at print time; "1" for 0/0 and None for x/0"""
    if bottom == 0:
        return "1" if top == 0 else None
    return format_rational(Fraction(top) / Fraction(bottom))


def lp_report(result: LpResult) -> Dict[str, Any]:
    return {
        'lp_value': rational(result.value),
        'x': [rational(v) for v in result.solution.values],
        'tight': [f"{kind}{index}" for kind, index in result.tight],
        'pivots': result.pivots,
    }


def solve_report(report: SolveReport) -> Dict[str, Any]:
    body = {
        'algorithm': report.algorithm.value,
        'lp_value': rational(report.lp_value),
        'alpha': rational(report.alpha),
        'term_count': report.term_count,
        'best_value': rational(report.best_value),
        'certified_ratio': ratio(report.lp_value, report.best_value),
        'bound': rational(report.bound),
    }
    if report.solution is not None:
        body['solution'] = list(report.solution.multiplicities)
    if report.ilp_value is not None:
        body['ilp_value'] = rational(report.ilp_value)
        body['ilp_ratio'] = ratio(report.ilp_value, report.best_value)
    return body


def gap_report(report: GapReport) -> Dict[str, Any]:
    return {
        'algorithm': report.algorithm.value,
        'lp_value': rational(report.lp_value),
        'ilp_value': rational(report.ilp_value),
        'gap': ratio(report.lp_value, report.ilp_value),
        'best_value': rational(report.best_value),
        'decomposition_ratio': ratio(report.lp_value, report.best_value),
        'bound': rational(report.bound),
    }


def allocation_report(allocation: Allocation, seed: int) -> Dict[str, Any]:
    return {
        'seed': seed,
        'assignment': {str(bidder): list(items) for bidder, items in sorted(allocation.assignment.items())},
        'welfare': rational(allocation.welfare),
        'expected_welfare': rational(allocation.expected_welfare),
        'best_welfare': rational(allocation.best_welfare),
        'lp_value': rational(allocation.lp_value),
        'alpha': rational(allocation.alpha),
        'certified_ratio': ratio(allocation.lp_value, allocation.best_welfare),
    }
