"""
Iterated packing for k-hypergraph b-matching (HbM) and the full
decomposition pipeline
"""
import logging
from fractions import Fraction
from typing import List, NamedTuple, Sequence

from hypermatch.core.hypergraph import Hypergraph, check_bipartite_witness
from hypermatch.core.instances import (
    BMatchInstance,
    FractionalSolution,
    IntegralSolution,
    is_feasible,
    validate,
)
from hypermatch.core.parameters import effective_k, high_value_edge, mu, rho
from hypermatch.lp.program import build_bmatch_lp
from hypermatch.lp.simplex import LpResult, solve_to_vertex
from hypermatch.lp.support import fractional_support_split, residual_instance
from hypermatch.packing.caratheodory import caratheodory_prune
from hypermatch.packing.combination import (
    AlphaConvexCombination,
    Term,
    best_term,
    split_term,
    trivial_combination,
)
from hypermatch.packing.context import PackingContext, recomposition_ok
from hypermatch.packing.modified_packing import modified_packing_step
from hypermatch.shared.config import Config
from hypermatch.shared.errors import InvariantViolation, ValidationError

logger = logging.getLogger(__name__)


class Decomposition(NamedTuple):
    """LP vertex x* and its rho-convex combination of feasible integral solutions"""
    lp_result: LpResult
    combination: AlphaConvexCombination


def _check_hbm_preconditions(h: Hypergraph, support: Sequence[int], x: FractionalSolution):
    in_support = set(support)
    for e, value in enumerate(x.values):
        if e in in_support and not 0 < value < 1:
            raise ValidationError(f"x_{e} = {value} must lie strictly between 0 and 1", edge=e)
        if e not in in_support and value != 0:
            raise ValidationError(f"x_{e} = {value} must be 0 off the support", edge=e)
    if not h.has_independent_columns(support):
        raise ValidationError("Incidence columns of the support are linearly dependent")


def hbm_core(h: Hypergraph, support: Sequence[int], x: FractionalSolution,
             bipartite: bool = False) -> AlphaConvexCombination:
    """
    Express x as a rho-convex combination of 0-1 solutions

    The recursion is unrolled: edges are removed in the order the algorithm
    discovers them (minimum-nonzero-degree vertex, then its largest-valued
    edge) and packed back in reverse with modified packing steps.

    Args:
        h: Hypergraph
        support: Edges with 0 < x_e < 1; their incidence columns independent
        x: Values, zero off the support
        bipartite: Use the bipartite rho/mu (caller has verified a witness)

    Returns:
        Combination with alpha = rho, value x, satisfying (i)/(ii) for x
    """
    support = sorted(support)
    _check_hbm_preconditions(h, support, x)
    k = effective_k(h, bipartite)
    ratio, degree_bound = rho(k, bipartite), mu(k, bipartite)

    removal_order: List[int] = []
    live = list(support)
    while live:
        _, e = high_value_edge(h, live, x.values, degree_bound)
        removal_order.append(e)
        live.remove(e)

    comb = trivial_combination(ratio, h.num_edges)
    current = FractionalSolution.zeros(h.num_edges)
    ctx_before = PackingContext.from_solution(h, current)
    for e in reversed(removal_order):
        current = current.with_value(e, x[e])
        ctx_after = PackingContext.from_solution(h, current)
        modified_packing_step(comb, h, e, x[e], ctx_before, ctx_after)
        ctx_before = ctx_after

    if Config.CHECK_INVARIANTS:
        limit = 1 + (k + 1) * len(support)
        if len(comb) > limit:
            raise InvariantViolation(f"{len(comb)} terms exceed the bound {limit}",
                                     state={'combination': comb.dump()})
    logger.info("HbM: %d support edges -> %d terms (rho=%s)", len(support), len(comb), ratio)
    return comb


def _attach_integer_part(comb: AlphaConvexCombination, integer_part: IntegralSolution,
                         w: Sequence[Fraction]) -> AlphaConvexCombination:
    """
    Add floor(x*) to a set of terms of lambda-mass exactly 1

    Terms are chosen best residual weight first (lowest index on ties), the
    last one split, so that sum lambda_i x^i becomes fractional part + floor.
    """
    if not any(integer_part.multiplicities):
        return comb
    order = sorted(range(len(comb)), key=lambda i: (-comb.terms[i].solution.weight(w), i))
    chosen = set()
    taken = Fraction(0)
    last = order[0]
    for i in order:
        if taken == 1:
            break
        chosen.add(i)
        taken += comb.terms[i].weight
        last = i
    if taken > 1:
        excess = taken - 1
        split_term(comb, last, comb.terms[last].weight - excess)
        chosen = {i + 1 if i > last else i for i in chosen}
    terms = [Term(t.weight, t.solution.plus(integer_part) if i in chosen else t.solution)
             for i, t in enumerate(comb.terms)]
    return AlphaConvexCombination(comb.alpha, terms, comb.num_edges)


def decompose(instance: BMatchInstance, prune: bool = False) -> Decomposition:
    """
    LP-relative rho-approximation by iterated packing

    Solves the relaxation to a vertex x*, fixes floor(x*), runs HbM on the
    fractional part of the residual simple instance, and puts floor(x*) back
    into terms of total mass 1. The result satisfies sum lambda_i x^i = x*,
    sum lambda_i = rho, every term feasible, and
    max_i w(x^i) >= w(x*) / rho.

    Args:
        instance: b-matching instance (validated here)
        prune: Apply Caratheodory pruning to the final combination

    Returns:
        Decomposition(lp_result, combination)
    """
    instance = validate(instance)
    h = instance.hypergraph
    bipartite = instance.bipartite
    if bipartite and not check_bipartite_witness(h, instance.bipartite_witness.distinguished_set):
        raise ValidationError("Bipartite witness failed re-verification")

    lp_result = solve_to_vertex(build_bmatch_lp(instance))
    integer_part, fractional, support = fractional_support_split(lp_result)
    residual = residual_instance(instance, integer_part, support)
    logger.info("decompose: LP=%s, integer part weight=%s, |support|=%d",
                lp_result.value, integer_part.weight(instance.w), len(support))

    comb = hbm_core(residual.hypergraph, support, fractional, bipartite)
    comb = _attach_integer_part(comb, integer_part, instance.w)
    if prune:
        comb = caratheodory_prune(comb)

    if Config.CHECK_INVARIANTS:
        problems = comb.check()
        if not recomposition_ok(comb, lp_result.solution.values):
            problems.append("recomposition differs from x*")
        infeasible = [i for i, t in enumerate(comb.terms) if not is_feasible(instance, t.solution)]
        if infeasible:
            problems.append(f"infeasible terms {infeasible}")
        _, best = best_term(comb, instance.w)
        if best * comb.alpha < lp_result.value:
            problems.append(f"best term {best} below LP/rho")
        if problems:
            raise InvariantViolation(f"Decomposition invariants failed: {problems[0]}",
                                     state={'problems': problems, 'combination': comb.dump()})
    return Decomposition(lp_result, comb)
