"""
Exact integer optima by bounded depth-first enumeration
"""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from hypermatch.core.instances import BMatchInstance, DemandInstance, IntegralSolution, validate
from hypermatch.shared.config import Config
from hypermatch.shared.errors import BudgetExceededError

logger = logging.getLogger(__name__)


def search_space_size(instance) -> int:
    """prod_e (c_e + 1) for b-matching, 2^|E| for demand matching"""
    if isinstance(instance, DemandInstance):
        return 2 ** instance.hypergraph.num_edges
    return math.prod(c + 1 for c in instance.c)


def _enumerate(h, b: Sequence[int], caps: Sequence[int], demands: Sequence[int],
               w: Sequence[Fraction]) -> Tuple[Fraction, IntegralSolution]:
    """
    Maximize w . m over 0 <= m <= caps with sum_e d_e m_e <= b_v at every v

    Multiplicities are tried in increasing lexicographic order and only a
    strictly better value replaces the incumbent, so the optimum returned is
    the lexicographically smallest one. Branches whose optimistic bound cannot
    beat the incumbent are cut.
    """
    m = h.num_edges
    tail_bound = [Fraction(0)] * (m + 1)
    for e in range(m - 1, -1, -1):
        tail_bound[e] = tail_bound[e + 1] + w[e] * caps[e]

    load = [0] * h.num_vertices
    current = [0] * m
    best_value = Fraction(-1)
    best: List[int] = [0] * m

    def search(e: int, value: Fraction):
        nonlocal best_value, best
        if value + tail_bound[e] <= best_value:
            return
        if e == m:
            best_value, best = value, list(current)
            return
        edge = h.edges[e]
        count = 0
        while True:
            search(e + 1, value + w[e] * count)
            if count == caps[e] or any(load[v] + demands[e] > b[v] for v in edge):
                break
            count += 1
            current[e] = count
            for v in edge:
                load[v] += demands[e]
        for v in edge:
            load[v] -= demands[e] * count
        current[e] = 0

    search(0, Fraction(0))
    return best_value, IntegralSolution(tuple(best))


def _check_budget(instance, budget: Optional[int]) -> int:
    budget = Config.ORACLE_BUDGET if budget is None else budget
    size = search_space_size(instance)
    if size > budget:
        raise BudgetExceededError(size, budget)
    return size


def brute_force_bmatch(instance: BMatchInstance, budget: Optional[int] = None) -> Tuple[Fraction, IntegralSolution]:
    """
    Exact b-matching optimum

    Args:
        instance: b-matching instance (validated here)
        budget: Search-space bound, defaults to Config.ORACLE_BUDGET

    Returns:
        (optimal value, lexicographically smallest optimal solution)

    Raises:
        BudgetExceededError: prod_e (c_e + 1) above the budget
    """
    instance = validate(instance)
    size = _check_budget(instance, budget)
    h = instance.hypergraph
    value, solution = _enumerate(h, instance.b, instance.c, instance.demands, instance.w)
    logger.debug("brute force b-matching over %d candidates: %s", size, value)
    return value, solution


def brute_force_demand(instance: DemandInstance, budget: Optional[int] = None) -> Tuple[Fraction, IntegralSolution]:
    """Exact demand-matching optimum over 0-1 edge sets (2^|E| within budget)"""
    instance = validate(instance)
    size = _check_budget(instance, budget)
    h = instance.hypergraph
    value, solution = _enumerate(h, instance.b, instance.capacities, instance.d, instance.w)
    logger.debug("brute force demand matching over %d subsets: %s", size, value)
    return value, solution


def brute_force(instance, budget: Optional[int] = None) -> Tuple[Fraction, IntegralSolution]:
    if isinstance(instance, DemandInstance):
        return brute_force_demand(instance, budget)
    return brute_force_bmatch(instance, budget)
