"""
Integer/fractional split of an LP vertex and the residual simple instance
"""
import logging
import math
from dataclasses import replace
from fractions import Fraction
from typing import Sequence, Tuple

from hypermatch.core.instances import BMatchInstance, FractionalSolution, IntegralSolution
from hypermatch.lp.simplex import LpResult
from hypermatch.shared.errors import InvariantViolation
from hypermatch.shared.utils import exact_rank

logger = logging.getLogger(__name__)


def fractional_support_split(result: LpResult) -> Tuple[IntegralSolution, FractionalSolution, Tuple[int, ...]]:
    """
    Write x* = floor(x*) + fractional part

    The constraint columns of the fractional support are certified linearly
    independent; at a vertex this always holds.

    Returns:
        (integer part, fractional part, support)

    Raises:
        InvariantViolation: rank certificate failed (input was not a vertex)
    """
    x = result.solution
    integer_part = IntegralSolution(tuple(math.floor(v) for v in x.values))
    fractional = FractionalSolution(tuple(v - math.floor(v) for v in x.values))
    support = fractional.support()

    columns = [[row[e] for e in support] for row in result.lp.rows]
    rank = exact_rank(columns, len(support))
    if rank != len(support):
        raise InvariantViolation(
            "Fractional support columns are dependent; input is not a vertex",
            state={'x': [str(v) for v in x.values], 'support': list(support), 'rank': rank})
    logger.debug("split: integer part %s, support %s", integer_part.multiplicities, support)
    return integer_part, fractional, support


def residual_instance(instance: BMatchInstance, integer_part: IntegralSolution,
                      support: Sequence[int]) -> BMatchInstance:
    """
    The simple residual problem left after fixing the integer part

    b' = b - A floor(x*), c'_e = 1 on the fractional support and 0 elsewhere.
    """
    h = instance.hypergraph
    loads = h.loads(integer_part.multiplicities)
    b = tuple(instance.b[v] - int(loads[v]) for v in range(h.num_vertices))
    in_support = set(support)
    c = tuple(1 if e in in_support else 0 for e in range(h.num_edges))
    return replace(instance, b=b, c=c)
