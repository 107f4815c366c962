"""
Modified packing step: pack an edge while keeping (i) A x^i <= ceil(Ax) and
(ii) the lambda-mass bound at ceiling degrees
"""
import logging
from fractions import Fraction
from typing import List

from hypermatch.core.hypergraph import Hypergraph
from hypermatch.packing.combination import AlphaConvexCombination, pack_into, split_term
from hypermatch.packing.context import PackingContext, check_step_conditions, recomposition_ok
from hypermatch.shared.config import Config
from hypermatch.shared.errors import InsufficientMassError, InvariantViolation, ValidationError
from hypermatch.shared.utils import as_fraction

logger = logging.getLogger(__name__)


def _degree_at(h: Hypergraph, solution, v: int) -> int:
    return sum(solution.multiplicities[f] for f in h.incident_edges(v))


def _block_case_three(comb: AlphaConvexCombination, blocked: List[bool], h: Hypergraph,
                      v: int, ceiling_before: int, need: Fraction):
    """
    Block a subset of Q'_v = {i : (A x^i)_v = ceil((Ax')_v)} of mass exactly need

    Terms are taken in index order and the last one is split when the running
    mass would overshoot. When Q'_v has less mass than need all of it is blocked.
    """
    taken = Fraction(0)
    index = 0
    while index < len(comb.terms) and taken < need:
        term = comb.terms[index]
        if _degree_at(h, term.solution, v) != ceiling_before:
            index += 1
            continue
        if taken + term.weight > need:
            portion = need - taken
            split_term(comb, index, portion)
            blocked.insert(index + 1, blocked[index])
        blocked[index] = True
        taken += comb.terms[index].weight
        index += 1


def modified_packing_step(comb: AlphaConvexCombination, h: Hypergraph, e: int, t,
                          ctx_before: PackingContext, ctx_after: PackingContext) -> AlphaConvexCombination:
    """
    Pack t = x_e of edge e into a combination satisfying (i)/(ii) for x'

    Per vertex v of e the blocked set Q_v is:
      case I   (A x')_v = 0: empty;
      case II  same ceiling before and after: terms already at the ceiling;
      case III ceiling rises by one: when both degrees are non-integral a
               subset of the terms at the old ceiling with mass 1 - t,
               otherwise empty.
    Mass t then goes to unblocked terms in index order. Mutates comb.

    Args:
        comb: Combination for x'
        h: Hypergraph
        e: Edge being packed (absent from every term)
        t: Its value x_e, 0 <= t <= 1
        ctx_before: Context for x'
        ctx_after: Context for x = x' + t chi_e

    Returns:
        The combination, now for x

    Raises:
        InsufficientMassError: room outside the blocked sets is below t
        InvariantViolation: (i)/(ii) or recomposition fail afterwards
    """
    t = as_fraction(t)
    if not 0 <= t <= 1:
        raise ValidationError(f"Packing mass {t} outside [0, 1]")
    if t == 0:
        return comb

    blocked = [False] * len(comb.terms)
    for v in h.edges[e]:
        before = ctx_before.degrees[v]
        if before == 0:
            continue
        ceiling_before = ctx_before.ceilings[v]
        ceiling_after = ctx_after.ceilings[v]
        if ceiling_after == ceiling_before:
            for index, term in enumerate(comb.terms):
                if _degree_at(h, term.solution, v) == ceiling_after:
                    blocked[index] = True
        elif ctx_before.is_integral(v) or ctx_after.is_integral(v):
            continue
        else:
            _block_case_three(comb, blocked, h, v, ceiling_before, 1 - t)

    try:
        pack_into(comb, e, t, [not b for b in blocked])
    except InsufficientMassError as exc:
        exc.state.update({
            'blocked': blocked,
            'degrees_before': [str(d) for d in ctx_before.degrees],
            'degrees_after': [str(d) for d in ctx_after.degrees],
        })
        raise

    if Config.CHECK_INVARIANTS:
        problems = check_step_conditions(comb, h, ctx_after)
        problems += comb.check()
        if not recomposition_ok(comb, ctx_after.x.values):
            problems.append("combination value differs from x")
        if problems:
            raise InvariantViolation(
                f"Modified packing of edge {e} broke its invariants: {problems[0]}",
                state={'problems': problems, 'edge': e, 't': str(t), 'combination': comb.dump()})
    logger.debug("packed edge %d with mass %s into %d terms", e, t, len(comb))
    return comb
