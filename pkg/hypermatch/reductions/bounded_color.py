"""
Bounded-color b-matching via a bipartite (k+1)-hypergraph
"""
import logging
import time
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Tuple

from hypermatch.core.hypergraph import BipartiteWitness, Hypergraph
from hypermatch.core.instances import BMatchInstance, IntegralSolution, is_feasible, validate
from hypermatch.core.report import SolveReport
from hypermatch.packing.combination import best_term
from hypermatch.packing.hbm import decompose
from hypermatch.reductions.edge_map import EdgeMap
from hypermatch.shared.constants import Algorithm
from hypermatch.shared.errors import InvariantViolation, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColoredInstance:
    """
    b-matching whose edges carry colors 0..l-1; at most budgets[i]
    edges (with multiplicity) of color i may be chosen
    """
    base: BMatchInstance
    colors: Tuple[int, ...]
    budgets: Tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(self.budgets)


def validate_colored(ci: ColoredInstance) -> ColoredInstance:
    """Validate the base instance, color ids and budgets"""
    base = validate(replace(ci.base, bipartite_witness=None))
    colors = tuple(int(c) for c in ci.colors)
    budgets = tuple(int(x) for x in ci.budgets)
    if len(colors) != base.hypergraph.num_edges:
        raise ValidationError(
            f"colors has {len(colors)} entries for {base.hypergraph.num_edges} edges")
    for i, budget in enumerate(budgets):
        if budget <= 0:
            raise ValidationError(f"Color {i} has nonpositive budget {budget}")
    for e, color in enumerate(colors):
        if not 0 <= color < len(budgets):
            raise ValidationError(f"Edge {e} has unknown color {color}", edge=e)
    return ColoredInstance(base, colors, budgets)


def is_colored_feasible(ci: ColoredInstance, solution: IntegralSolution) -> bool:
    """Feasible for the base instance and within every color budget"""
    if not is_feasible(ci.base, solution):
        return False
    used = [0] * ci.num_colors
    for e, m in enumerate(solution.multiplicities):
        used[ci.colors[e]] += m
    return all(u <= budget for u, budget in zip(used, ci.budgets))


def bounded_color_to_bipartite(ci: ColoredInstance) -> Tuple[BMatchInstance, EdgeMap]:
    """
    Add one vertex per color with limit equal to its budget and put it in
    every edge of that color; the color vertices form the bipartite witness

    Returns:
        (reduced instance, edge map from colored edges to reduced edges)
    """
    ci = validate_colored(ci)
    base = ci.base
    n = base.hypergraph.num_vertices
    edges = [edge + (n + color,) for edge, color in zip(base.hypergraph.edges, ci.colors)]
    hypergraph = Hypergraph.from_edges(n + ci.num_colors, edges)
    witness = BipartiteWitness(frozenset(range(n, n + ci.num_colors)))
    reduced = validate(BMatchInstance(
        hypergraph, base.b + ci.budgets, base.c, base.w, witness))
    logger.debug("bounded-color reduction: %d colors, k=%d", ci.num_colors, hypergraph.k)
    return reduced, EdgeMap.identity(hypergraph.num_edges)


def solve_bounded_color(ci: ColoredInstance, prune: bool = False) -> SolveReport:
    """
    Reduce, decompose with the bipartite ratio and map the best term back

    The certified ratio is LP(reduced) / w(best) <= k for base edge size k.
    """
    started = time.perf_counter()
    ci = validate_colored(ci)
    reduced, edge_map = bounded_color_to_bipartite(ci)
    lp_result, comb = decompose(reduced, prune=prune)
    best, best_value = best_term(comb, reduced.w)
    solution = edge_map.to_source(best)
    if not is_colored_feasible(ci, solution):
        raise InvariantViolation("Mapped-back solution breaks a color budget",
                                 state={'solution': solution.edges()})
    report = SolveReport(
        algorithm=Algorithm.BOUNDED_COLOR,
        lp_value=lp_result.value,
        alpha=comb.alpha,
        term_count=len(comb),
        best_value=best_value,
        bound=Fraction(comb.alpha),
        solution=solution,
        wall_time=time.perf_counter() - started,
    )
    logger.info("bounded-color: LP=%s best=%s ratio=%s", report.lp_value, best_value,
                report.certified_ratio)
    return report
