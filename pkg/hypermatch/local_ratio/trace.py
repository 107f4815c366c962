"""
Weight decomposition trace recorded by the local-ratio algorithm
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from hypermatch.core.instances import DemandInstance
from hypermatch.shared.communication import format_rational


@dataclass(frozen=True)
class TraceLevel:
    """
    One local-ratio level

    Attributes:
        edge: The minimum-demand edge e picked at this level
        scale: Its current weight w_e
        live: Edges live at this level (sorted)
        w_hat: w-hat over the live edges, keyed by edge
        residual: w' = w - scale * w_hat over the live edges
    """
    edge: int
    scale: Fraction
    live: Tuple[int, ...]
    w_hat: Dict[int, Fraction]
    residual: Dict[int, Fraction]

    @property
    def next_live(self) -> Tuple[int, ...]:
        """E' = {f : w'_f > 0}"""
        return tuple(f for f in self.live if self.residual[f] > 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'edge': self.edge,
            'scale': format_rational(self.scale),
            'live': list(self.live),
            'w_hat': {str(f): format_rational(v) for f, v in sorted(self.w_hat.items())},
        }


@dataclass
class WeightDecompositionTrace:
    """Ordered levels of one hdm run"""
    levels: List[TraceLevel] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self) -> Iterator[TraceLevel]:
        return iter(self.levels)

    def append(self, level: TraceLevel):
        self.levels.append(level)

    def telescoping_residual(self, w: Sequence[Fraction]) -> Dict[int, Fraction]:
        """
        w_f - sum over levels of scale * w_hat_f, for every edge ever live

        Local ratio requires this to be <= 0 for every such edge.
        """
        residual: Dict[int, Fraction] = {}
        for level in self.levels:
            for f in level.live:
                residual.setdefault(f, Fraction(w[f]))
                residual[f] -= level.scale * level.w_hat[f]
        return residual

    def problems(self, w: Sequence[Fraction]) -> List[str]:
        """Structural violations: w_hat_e != 1, w'_e != 0, positive telescoping residual"""
        problems = []
        for index, level in enumerate(self.levels):
            if level.w_hat[level.edge] != 1:
                problems.append(f"level {index}: w_hat of edge {level.edge} is {level.w_hat[level.edge]}")
            if level.residual[level.edge] != 0:
                problems.append(f"level {index}: w' of edge {level.edge} is nonzero")
        for f, value in sorted(self.telescoping_residual(w).items()):
            if value > 0:
                problems.append(f"edge {f} keeps positive residual weight {value}")
        return problems

    def to_dict(self) -> Dict[str, Any]:
        return {'levels': [level.to_dict() for level in self.levels]}


def feasible_subsets(instance: DemandInstance, edges: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """All subsets of edges that are feasible for the demand constraints (depth-first)"""
    h = instance.hypergraph
    edges = list(edges)
    load = [0] * h.num_vertices
    chosen: List[int] = []

    def search(position: int) -> Iterator[Tuple[int, ...]]:
        if position == len(edges):
            yield tuple(chosen)
            return
        yield from search(position + 1)
        f = edges[position]
        demand = instance.d[f]
        if all(load[v] + demand <= instance.b[v] for v in h.edges[f]):
            for v in h.edges[f]:
                load[v] += demand
            chosen.append(f)
            yield from search(position + 1)
            chosen.pop()
            for v in h.edges[f]:
                load[v] -= demand

    return search(0)


def check_weight_bounds(instance: DemandInstance, level: TraceLevel) -> List[str]:
    """
    Enumerate the level's feasible solutions and check the w-hat bounds

    For every feasible X among the live edges, w_hat(X) <= 2k; for every
    feasible X avoiding e to which e cannot be added, w_hat(X) >= 1.
    Exponential in the number of live edges; meant for small instances.
    """
    h = instance.hypergraph
    k = max(h.k, 1)
    e = level.edge
    problems = []
    for subset in feasible_subsets(instance, level.live):
        value = sum((level.w_hat[f] for f in subset), Fraction(0))
        if value > 2 * k:
            problems.append(f"edge {e}: w_hat({list(subset)}) = {value} > {2 * k}")
        if e in subset:
            continue
        blocked = any(
            sum(instance.d[f] for f in subset if v in h.edges[f]) + instance.d[e] > instance.b[v]
            for v in h.edges[e])
        if blocked and value < 1:
            problems.append(f"edge {e}: blocking set {list(subset)} has w_hat {value} < 1")
    return problems
