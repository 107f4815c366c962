"""
Local-ratio 2k-approximation for k-hypergraph demand matching (HDM)
"""
import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from hypermatch.core.instances import DemandInstance, IntegralSolution, validate
from hypermatch.local_ratio.trace import TraceLevel, WeightDecompositionTrace
from hypermatch.shared.config import Config
from hypermatch.shared.errors import InvariantViolation, ValidationError

logger = logging.getLogger(__name__)


def what_weights(instance: DemandInstance, live: Sequence[int], e: int) -> Dict[int, Fraction]:
    """
    The w-hat vector of edge e over the live edges

    w_hat_e = 1 and, for f != e,
        w_hat_f = sum_{v in e & f} d_f / max(b_v - d_e, d_e)
    which is 0 when f misses e.

    Args:
        instance: Validated demand instance (no-clipping holds)
        live: Live edge subset containing e
        e: Edge of minimum demand among the live edges

    Returns:
        Mapping live edge -> w_hat
    """
    if e not in live:
        raise ValidationError(f"Edge {e} is not live", edge=e)
    h = instance.hypergraph
    d_e = instance.d[e]
    denominators = {v: max(instance.b[v] - d_e, d_e) for v in h.edges[e]}
    weights: Dict[int, Fraction] = {}
    for f in live:
        if f == e:
            weights[f] = Fraction(1)
            continue
        shared = set(h.edges[e]).intersection(h.edges[f])
        weights[f] = sum((Fraction(instance.d[f], denominators[v]) for v in shared), Fraction(0))
    return weights


def _pick_edge(instance: DemandInstance, live: Sequence[int]) -> int:
    """Minimum demand, lowest index on ties"""
    return min(live, key=lambda f: (instance.d[f], f))


def _fits(instance: DemandInstance, load: List[int], e: int) -> bool:
    return all(load[v] + instance.d[e] <= instance.b[v] for v in instance.hypergraph.edges[e])


def hdm(instance: DemandInstance) -> Tuple[IntegralSolution, WeightDecompositionTrace]:
    """
    Local-ratio demand matching

    Each level picks the live edge e of minimum demand, subtracts w_e * w_hat
    from the weights and keeps the edges whose weight stays positive. Going
    back up, e joins the solution whenever it still fits. The recursion is run
    with an explicit stack of levels.

    Args:
        instance: Demand instance with unit capacities (validated here)

    Returns:
        (0-1 solution F, trace of the weight decomposition)
    """
    instance = validate(instance)
    h = instance.hypergraph
    trace = WeightDecompositionTrace()

    weights = {f: instance.w[f] for f in range(h.num_edges)}
    live = tuple(f for f in range(h.num_edges) if weights[f] > 0)
    while live:
        e = _pick_edge(instance, live)
        scale = weights[e]
        w_hat = what_weights(instance, live, e)
        residual = {f: weights[f] - scale * w_hat[f] for f in live}
        level = TraceLevel(e, scale, live, w_hat, residual)
        trace.append(level)
        logger.debug("HDM level %d: edge %d, scale %s, %d live -> %d",
                     len(trace), e, scale, len(live), len(level.next_live))
        weights = residual
        live = level.next_live

    chosen = [0] * h.num_edges
    load = [0] * h.num_vertices
    for level in reversed(trace.levels):
        e = level.edge
        if _fits(instance, load, e):
            chosen[e] = 1
            for v in h.edges[e]:
                load[v] += instance.d[e]
    solution = IntegralSolution(tuple(chosen))

    if Config.CHECK_INVARIANTS:
        problems = trace.problems(instance.w)
        if any(load[v] > instance.b[v] for v in range(h.num_vertices)):
            problems.append("output violates a vertex limit")
        if problems:
            raise InvariantViolation(f"HDM invariants failed: {problems[0]}",
                                     state={'problems': problems, 'trace': trace.to_dict()})
    logger.info("HDM: %d levels, %d edges chosen, weight %s",
                len(trace), sum(chosen), solution.weight(instance.w))
    return solution, trace
