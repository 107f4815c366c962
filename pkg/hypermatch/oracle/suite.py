"""
Random verification suites: generate, solve, check the certified bound
"""
import logging
from fractions import Fraction
from typing import Any, Dict, Optional

import numpy as np

from hypermatch.core.parameters import effective_k
from hypermatch.local_ratio.hdm import hdm
from hypermatch.lp.program import build_demand_lp
from hypermatch.lp.simplex import solve_to_vertex
from hypermatch.oracle.brute_force import brute_force
from hypermatch.oracle.random_instances import (
    random_auction,
    random_bmatch,
    random_colored,
    random_demand,
)
from hypermatch.oracle.suite_logger import SuiteLogger
from hypermatch.packing.combination import best_term, expected_value
from hypermatch.packing.hbm import decompose
from hypermatch.reductions.auction import auction_to_bipartite, sample_allocation
from hypermatch.reductions.bounded_color import bounded_color_to_bipartite, solve_bounded_color
from hypermatch.shared.config import Config, get_suite_config
from hypermatch.shared.errors import HypermatchError

logger = logging.getLogger(__name__)


def _ratio(lp_value: Fraction, best: Fraction) -> Optional[Fraction]:
    if best == 0:
        return Fraction(1) if lp_value == 0 else None
    return lp_value / best


def _run_bmatch(rng, params, index, suite: SuiteLogger, oracle: bool, budget):
    k = int(rng.choice(params['k_values']))
    instance = random_bmatch(rng, k, params['max_vertices'], params['max_edges'],
                             params['b_range'], params['c_range'], params['bipartite'])
    lp_result, comb = decompose(instance)
    _, best = best_term(comb, instance.w)
    passed = best * comb.alpha >= lp_result.value
    passed &= expected_value(comb, instance.w) * comb.alpha == lp_result.value
    ilp = None
    if oracle:
        ilp, _ = brute_force(instance, budget)
        passed &= best <= ilp <= lp_result.value
    suite.log_row(index, 'bmatch', effective_k(instance.hypergraph, instance.bipartite),
                  instance.bipartite, lp_result.value, best, _ratio(lp_result.value, best),
                  comb.alpha, len(comb), ilp, bool(passed))


def _run_demand(rng, params, index, suite: SuiteLogger, oracle: bool, budget):
    instance = random_demand(rng, params['k_max'], params['max_vertices'], params['max_edges'],
                             params['b_range'])
    lp_value = solve_to_vertex(build_demand_lp(instance)).value
    solution, _ = hdm(instance)
    value = solution.weight(instance.w)
    k = effective_k(instance.hypergraph, False)
    passed = value * 2 * k >= lp_value
    ilp = None
    if oracle:
        ilp, _ = brute_force(instance, budget)
        passed &= value <= ilp <= lp_value
    suite.log_row(index, 'demand', k, False, lp_value, value, _ratio(lp_value, value),
                  Fraction(2 * k), 0, ilp, bool(passed))


def _run_colored(rng, params, index, suite: SuiteLogger, oracle: bool, budget):
    ci = random_colored(rng, params['max_vertices'], params['max_edges'], params['max_colors'],
                        params['budget_range'], params['b_range'])
    report = solve_bounded_color(ci)
    passed = report.within_bound
    ilp = None
    if oracle:
        reduced, _ = bounded_color_to_bipartite(ci)
        ilp, _ = brute_force(reduced, budget)
        passed &= report.best_value <= ilp <= report.lp_value
    suite.log_row(index, 'colored', 2, True, report.lp_value, report.best_value,
                  report.certified_ratio, report.bound, report.term_count, ilp, bool(passed))


def _run_auction(rng, params, index, suite: SuiteLogger, oracle: bool, budget):
    a = random_auction(rng, params['max_bidders'], params['max_items'], params['max_bundle'],
                       params['max_bids_per_bidder'])
    allocation = sample_allocation(a, seed=index)
    passed = allocation.expected_welfare * allocation.alpha == allocation.lp_value
    passed &= allocation.best_welfare * allocation.alpha >= allocation.lp_value
    taken = [j for bundle in allocation.assignment.values() for j in bundle]
    passed &= len(taken) == len(set(taken))
    ilp = None
    if oracle:
        reduced, _ = auction_to_bipartite(a)
        ilp, _ = brute_force(reduced, budget)
        passed &= allocation.best_welfare <= ilp <= allocation.lp_value
    suite.log_row(index, 'auction', params['max_bundle'] + 1, True, allocation.lp_value,
                  allocation.best_welfare, _ratio(allocation.lp_value, allocation.best_welfare),
                  allocation.alpha, 0, ilp, bool(passed))


RUNNERS = {
    'lp-relative': _run_bmatch,
    'bipartite': _run_bmatch,
    'demand': _run_demand,
    'bounded-color': _run_colored,
    'auction': _run_auction,
}


def run_suite(name: str, seed: int = 0, count: Optional[int] = None,
              log_dir: Optional[str] = None, oracle: bool = True,
              budget: Optional[int] = None) -> Dict[str, Any]:
    """
    Run a named random suite and check every instance's certificate

    Args:
        name: Suite name understood by get_suite_config
        seed: numpy generator seed
        count: Override the suite's instance count
        log_dir: Directory for the CSV/metadata output (nothing written if None)
        oracle: Also run the brute-force sandwich check
        budget: Brute-force budget, defaults to Config.ORACLE_BUDGET

    Returns:
        Summary dict: suite, runs, failures, worst_ratio
    """
    params = get_suite_config(name)
    if count is not None:
        params['count'] = count
    runner = RUNNERS[name]
    rng = np.random.default_rng(seed)
    suite = SuiteLogger(name, log_dir)
    budget = Config.ORACLE_BUDGET if budget is None else budget
    for index in range(params['count']):
        try:
            runner(rng, params, index, suite, oracle, budget)
        except HypermatchError as exc:
            logger.warning("suite %s instance %d failed: %s", name, index, exc)
            suite.log_event(index, type(exc).__name__, str(exc))
    suite.save(params)
    summary = suite.summary()
    logger.info("suite %s: %s", name, summary)
    return summary
