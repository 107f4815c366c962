"""
Caratheodory pruning of a finished combination
"""
import logging
from fractions import Fraction

from hypermatch.packing.combination import AlphaConvexCombination, Term, merge_identical
from hypermatch.shared.utils import exact_nullspace

logger = logging.getLogger(__name__)


def caratheodory_prune(comb: AlphaConvexCombination) -> AlphaConvexCombination:
    """
    Rewrite comb with at most |E| + 1 terms, same alpha and same value

    Repeatedly finds an affine dependency sum mu_i x^i = 0, sum mu_i = 0 among
    the term vectors and shifts lambda along it until some lambda_i reaches 0.
    Only meant for final outputs: reweighting does not preserve the per-vertex
    mass bounds kept during packing.
    """
    pruned = merge_identical(comb)
    terms = [Term(t.weight, t.solution) for t in pruned.terms]
    limit = comb.num_edges + 1
    while len(terms) > limit:
        # one column per term: (x^i ; 1)
        rows = [[t.solution.multiplicities[e] for t in terms] for e in range(comb.num_edges)]
        rows.append([1] * len(terms))
        dependency = exact_nullspace(rows, len(terms))[0]
        if all(m <= 0 for m in dependency):
            dependency = [-m for m in dependency]
        theta = min(terms[i].weight / m for i, m in enumerate(dependency) if m > 0)
        shifted = []
        for term, m in zip(terms, dependency):
            weight = term.weight - theta * m
            if weight > 0:
                shifted.append(Term(weight, term.solution))
        logger.debug("pruned %d -> %d terms", len(terms), len(shifted))
        terms = shifted
    return AlphaConvexCombination(comb.alpha, terms, comb.num_edges)
