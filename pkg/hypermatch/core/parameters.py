"""
Approximation ratio rho, degree bound mu and low-degree vertex selection
"""
import logging
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from hypermatch.core.hypergraph import Hypergraph
from hypermatch.shared.config import Config
from hypermatch.shared.errors import InvariantViolation, ValidationError

logger = logging.getLogger(__name__)


def _check_k(k: int, bipartite: bool):
    if k < 1:
        raise ValidationError(f"Edge-size bound must be at least 1, got {k}")
    if bipartite and k < 2:
        raise ValidationError("Bipartite hypergraphs need edge-size bound k >= 2")


def rho(k: int, bipartite: bool = False) -> Fraction:
    """k - 1 + 1/k in general, k - 1 for bipartite hypergraphs"""
    _check_k(k, bipartite)
    if bipartite:
        return Fraction(k - 1)
    return Fraction(k - 1) + Fraction(1, k)


def mu(k: int, bipartite: bool = False) -> int:
    """Degree bound of a low-degree vertex: k in general, k - 1 bipartite"""
    _check_k(k, bipartite)
    return k - 1 if bipartite else k


def effective_k(h: Hypergraph, bipartite: bool) -> int:
    """
    Edge-size bound used for rho/mu

    A k-hypergraph is also a k'-hypergraph for k' >= k, so the smallest
    admissible bound is used for degenerate inputs (no edges, or bipartite
    with singleton edges).
    """
    floor_k = 2 if bipartite else 1
    return max(h.k, floor_k)


def ratio_parameters(h: Hypergraph, bipartite: bool) -> Tuple[Fraction, int]:
    k = effective_k(h, bipartite)
    return rho(k, bipartite), mu(k, bipartite)


def min_nonzero_degree_vertex(h: Hypergraph, support: Iterable[int],
                              degree_bound: Optional[int] = None) -> Optional[int]:
    """
    Vertex of minimum degree >= 1 in (V, support), lowest id on ties

    Args:
        h: Hypergraph
        support: Edge subset
        degree_bound: When given (the caller knows the support columns are
            independent), the chosen degree is asserted to be <= this bound

    Returns:
        Vertex id, or None when support is empty
    """
    degrees = [0] * h.num_vertices
    for e in support:
        for v in h.edges[e]:
            degrees[v] += 1
    best = None
    for v, deg in enumerate(degrees):
        if deg > 0 and (best is None or deg < degrees[best]):
            best = v
    if best is not None and degree_bound is not None and Config.CHECK_INVARIANTS:
        if degrees[best] > degree_bound:
            raise InvariantViolation(
                f"Minimum nonzero degree {degrees[best]} exceeds bound {degree_bound}",
                state={'support': sorted(support), 'vertex': best, 'degree': degrees[best]})
    return best


def high_value_edge(h: Hypergraph, support: Sequence[int], x: Sequence[Fraction],
                    degree_bound: Optional[int] = None) -> Optional[Tuple[int, int]]:
    """
    The (vertex, edge) pair Algorithm HbM removes next

    Picks the minimum-nonzero-degree vertex, then the incident support edge
    with largest x_e (lowest edge index on ties).

    Returns:
        (vertex, edge), or None when support is empty
    """
    support = list(support)
    v = min_nonzero_degree_vertex(h, support, degree_bound)
    if v is None:
        return None
    incident = h.incident_edges(v, support)
    e = min(incident, key=lambda f: (-x[f], f))
    if degree_bound is not None and Config.CHECK_INVARIANTS:
        total = sum((x[f] for f in incident), Fraction(0))
        if total >= 1 and x[e] * degree_bound < 1:
            raise InvariantViolation(
                f"Edge {e} at vertex {v} has value {x[e]} below 1/{degree_bound}",
                state={'vertex': v, 'edge': e, 'x_e': str(x[e])})
    logger.debug("high-value edge: vertex %d, edge %d, x_e=%s", v, e, x[e])
    return v, e
