"""
Instance representation and the rho/mu parameter logic

Components:
    Hypergraph: vertex/edge structure housing the 0-1 incidence matrix
    BipartiteWitness: distinguished vertex set met once by every edge
    BMatchInstance / DemandInstance: b, c, w (and d) vectors
    FractionalSolution / IntegralSolution: per-edge values
    SolveReport: pipeline outcome with a recomputed certified ratio
"""

from .hypergraph import Hypergraph, BipartiteWitness, check_bipartite_witness
from .instances import (
    BMatchInstance,
    DemandInstance,
    FractionalSolution,
    IntegralSolution,
    validate,
    is_feasible,
    is_fractionally_feasible,
    capacities,
    integer_floor,
)
from .parameters import (
    rho,
    mu,
    effective_k,
    ratio_parameters,
    min_nonzero_degree_vertex,
    high_value_edge,
)
from .report import SolveReport

__all__ = [
    'Hypergraph',
    'BipartiteWitness',
    'check_bipartite_witness',
    'BMatchInstance',
    'DemandInstance',
    'FractionalSolution',
    'IntegralSolution',
    'validate',
    'is_feasible',
    'is_fractionally_feasible',
    'capacities',
    'integer_floor',
    'rho',
    'mu',
    'effective_k',
    'ratio_parameters',
    'min_nonzero_degree_vertex',
    'high_value_edge',
    'SolveReport',
]


def make_bmatch_instance(num_vertices, edges, b, w, c=None, bipartite_u=None):
    """
    Factory for a validated b-matching instance

    Args:
        num_vertices: Vertex count
        edges: Iterable of vertex-id iterables
        b: Per-vertex limits
        w: Per-edge weights (ints or Fractions)
        c: Per-edge capacities, default all 1
        bipartite_u: Optional witness vertex set

    Returns:
        Validated BMatchInstance
    """
    h = Hypergraph.from_edges(num_vertices, edges)
    if c is None:
        c = (1,) * h.num_edges
    witness = BipartiteWitness(frozenset(bipartite_u)) if bipartite_u is not None else None
    return validate(BMatchInstance(h, tuple(b), tuple(c), tuple(w), witness))


def make_demand_instance(num_vertices, edges, b, d, w):
    """Factory for a validated demand instance"""
    h = Hypergraph.from_edges(num_vertices, edges)
    return validate(DemandInstance(h, tuple(b), tuple(d), tuple(w)))


__all__ += ['make_bmatch_instance', 'make_demand_instance']
