"""
Problem instances, solutions and validation
"""
import logging
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from hypermatch.core.hypergraph import BipartiteWitness, Hypergraph, check_bipartite_witness
from hypermatch.shared.constants import UNBOUNDED
from hypermatch.shared.errors import ValidationError
from hypermatch.shared.utils import as_fraction

logger = logging.getLogger(__name__)

Capacity = Union[int, str]


@dataclass(frozen=True)
class FractionalSolution:
    """Exact rational value per edge"""
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(as_fraction(v) for v in self.values))

    @classmethod
    def zeros(cls, num_edges: int) -> 'FractionalSolution':
        return cls(tuple(Fraction(0) for _ in range(num_edges)))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, e: int) -> Fraction:
        return self.values[e]

    def support(self) -> Tuple[int, ...]:
        return tuple(e for e, v in enumerate(self.values) if v != 0)

    def weight(self, w: Sequence[Fraction]) -> Fraction:
        return sum((v * w[e] for e, v in enumerate(self.values)), Fraction(0))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def with_value(self, e: int, value) -> 'FractionalSolution':
        values = list(self.values)
        values[e] = as_fraction(value)
        return FractionalSolution(tuple(values))


@dataclass(frozen=True)
class IntegralSolution:
    """Nonnegative integer multiplicity per edge"""
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'multiplicities', tuple(int(m) for m in self.multiplicities))
        if any(m < 0 for m in self.multiplicities):
            raise ValidationError("Multiplicities must be nonnegative")

    @classmethod
    def zeros(cls, num_edges: int) -> 'IntegralSolution':
        return cls((0,) * num_edges)

    @classmethod
    def unit(cls, num_edges: int, e: int) -> 'IntegralSolution':
        """chi_e"""
        return cls.zeros(num_edges).with_edge(e)

    def __len__(self) -> int:
        return len(self.multiplicities)

    def __getitem__(self, e: int) -> int:
        return self.multiplicities[e]

    def with_edge(self, e: int, count: int = 1) -> 'IntegralSolution':
        values = list(self.multiplicities)
        values[e] += count
        return IntegralSolution(tuple(values))

    def plus(self, other: 'IntegralSolution') -> 'IntegralSolution':
        return IntegralSolution(tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities)))

    def edges(self) -> List[int]:
        """Edge multiset as a sorted list of edge ids"""
        return [e for e, m in enumerate(self.multiplicities) for _ in range(m)]

    def weight(self, w: Sequence[Fraction]) -> Fraction:
        return sum((m * w[e] for e, m in enumerate(self.multiplicities)), Fraction(0))

    def as_fractional(self) -> FractionalSolution:
        return FractionalSolution(tuple(Fraction(m) for m in self.multiplicities))


@dataclass(frozen=True)
class BMatchInstance:
    """k-hypergraph b-matching: limits b, capacities c, weights w"""
    hypergraph: Hypergraph
    b: Tuple[int, ...]
    c: Tuple[Capacity, ...]
    w: Tuple[Fraction, ...]
    bipartite_witness: Optional[BipartiteWitness] = None

    @property
    def bipartite(self) -> bool:
        return self.bipartite_witness is not None

    @property
    def demands(self) -> Tuple[int, ...]:
        return (1,) * self.hypergraph.num_edges


@dataclass(frozen=True)
class DemandInstance:
    """k-hypergraph demand matching with unit edge capacities"""
    hypergraph: Hypergraph
    b: Tuple[int, ...]
    d: Tuple[int, ...]
    w: Tuple[Fraction, ...]
    c: Optional[Tuple[Capacity, ...]] = None

    @property
    def demands(self) -> Tuple[int, ...]:
        return self.d

    @property
    def capacities(self) -> Tuple[int, ...]:
        return (1,) * self.hypergraph.num_edges


Instance = Union[BMatchInstance, DemandInstance]


def _check_lengths(h: Hypergraph, b: Sequence, per_edge: dict):
    if len(b) != h.num_vertices:
        raise ValidationError(f"b has {len(b)} entries for {h.num_vertices} vertices")
    for name, values in per_edge.items():
        if len(values) != h.num_edges:
            raise ValidationError(f"{name} has {len(values)} entries for {h.num_edges} edges")


def _check_weights(w: Sequence) -> Tuple[Fraction, ...]:
    weights = tuple(as_fraction(x) for x in w)
    for e, x in enumerate(weights):
        if x < 0:
            raise ValidationError(f"Edge {e} has negative weight {x}", edge=e)
    return weights


def _check_limits(b: Sequence) -> Tuple[int, ...]:
    limits = tuple(int(x) for x in b)
    for v, x in enumerate(limits):
        if x < 0:
            raise ValidationError(f"Vertex {v} has negative limit {x}", vertex=v)
    return limits


def _normalize_capacity(e: int, capacity: Capacity, edge: Tuple[int, ...],
                        b: Tuple[int, ...], demand: int) -> int:
    bound = min((b[v] // demand for v in edge), default=0)
    if capacity == UNBOUNDED:
        return bound
    if isinstance(capacity, bool) or not isinstance(capacity, int) or capacity < 0:
        raise ValidationError(f"Edge {e} has invalid capacity {capacity!r}", edge=e)
    return min(capacity, bound)


def _validate_bmatch(instance: BMatchInstance) -> BMatchInstance:
    h = instance.hypergraph
    _check_lengths(h, instance.b, {'c': instance.c, 'w': instance.w})
    b = _check_limits(instance.b)
    w = _check_weights(instance.w)
    c = tuple(_normalize_capacity(e, cap, h.edges[e], b, 1)
              for e, cap in enumerate(instance.c))
    witness = instance.bipartite_witness
    if witness is not None and not check_bipartite_witness(h, witness.distinguished_set):
        raise ValidationError("Bipartite witness does not meet every edge exactly once")
    return replace(instance, b=b, c=c, w=w)


def _validate_demand(instance: DemandInstance) -> DemandInstance:
    h = instance.hypergraph
    _check_lengths(h, instance.b, {'d': instance.d, 'w': instance.w})
    b = _check_limits(instance.b)
    w = _check_weights(instance.w)
    d = tuple(int(x) for x in instance.d)
    for e, demand in enumerate(d):
        if demand <= 0:
            raise ValidationError(f"Edge {e} has nonpositive demand {demand}", edge=e)
    if instance.c is not None:
        if len(instance.c) != h.num_edges:
            raise ValidationError(f"c has {len(instance.c)} entries for {h.num_edges} edges")
        for e, cap in enumerate(instance.c):
            if cap != 1:
                raise ValidationError(
                    f"Edge {e}: demand matching supports unit capacities only", edge=e)
    for e, edge in enumerate(h.edges):
        for v in edge:
            if d[e] > b[v]:
                raise ValidationError(
                    f"No-clipping violated: edge {e} has demand {d[e]} > b_{v} = {b[v]}",
                    edge=e, vertex=v)
    return replace(instance, b=b, d=d, w=w, c=None)


def validate(instance: Instance) -> Instance:
    """
    Check all invariants and normalize capacities

    Capacities become min(c_e, min_{v in e} floor(b_v / d_e)); the "inf"
    sentinel is replaced by that bound. Idempotent.

    Args:
        instance: BMatchInstance or DemandInstance

    Returns:
        Validated copy

    Raises:
        ValidationError: dimension mismatch, negative weight, no-clipping
            violation, invalid witness or capacity
    """
    if isinstance(instance, BMatchInstance):
        return _validate_bmatch(instance)
    if isinstance(instance, DemandInstance):
        return _validate_demand(instance)
    raise ValidationError(f"Unsupported instance type {type(instance).__name__}")


def capacities(instance: Instance) -> Tuple[int, ...]:
    if isinstance(instance, DemandInstance):
        return instance.capacities
    return tuple(instance.c)


def is_feasible(instance: Instance, solution: IntegralSolution) -> bool:
    """Exact capacity and degree check for an integral solution"""
    h = instance.hypergraph
    if len(solution) != h.num_edges:
        return False
    caps = capacities(instance)
    if any(m > caps[e] for e, m in enumerate(solution.multiplicities)):
        return False
    loads = h.loads(solution.multiplicities, instance.demands)
    return all(loads[v] <= instance.b[v] for v in range(h.num_vertices))


def is_fractionally_feasible(instance: Instance, x: FractionalSolution) -> bool:
    """0 <= x <= c and A[d] x <= b, exactly"""
    h = instance.hypergraph
    caps = capacities(instance)
    if len(x) != h.num_edges:
        return False
    if any(v < 0 or v > caps[e] for e, v in enumerate(x.values)):
        return False
    loads = h.loads(x.values, instance.demands)
    return all(loads[v] <= instance.b[v] for v in range(h.num_vertices))


def integer_floor(x: FractionalSolution) -> IntegralSolution:
    return IntegralSolution(tuple(math.floor(v) for v in x.values))
