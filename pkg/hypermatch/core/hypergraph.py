"""
Hypergraph structure and bipartite witnesses
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from hypermatch.shared.errors import ValidationError
from hypermatch.shared.utils import as_fraction, exact_rank


@dataclass(frozen=True)
class Hypergraph:
    """
    Vertices 0..num_vertices-1 and an ordered list of hyperedges.

    Each edge is stored as a sorted tuple of distinct vertex ids; parallel
    edges are distinct list entries.
    """
    num_vertices: int
    edges: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.num_vertices < 0:
            raise ValidationError("num_vertices must be nonnegative")
        normalized = []
        for index, edge in enumerate(self.edges):
            members = [int(v) for v in edge]
            if not members:
                raise ValidationError(f"Edge {index} is empty", edge=index)
            if len(set(members)) != len(members):
                raise ValidationError(f"Edge {index} repeats a vertex", edge=index)
            for v in members:
                if not 0 <= v < self.num_vertices:
                    raise ValidationError(
                        f"Edge {index} uses vertex {v} outside 0..{self.num_vertices - 1}",
                        edge=index, vertex=v)
            normalized.append(tuple(sorted(members)))
        object.__setattr__(self, 'edges', tuple(normalized))

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Iterable[int]]) -> 'Hypergraph':
        return cls(num_vertices, tuple(tuple(e) for e in edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def k(self) -> int:
        """Maximum edge size (0 for an edgeless hypergraph)"""
        return max((len(e) for e in self.edges), default=0)

    @cached_property
    def _incidence_lists(self) -> Tuple[Tuple[int, ...], ...]:
        lists: List[List[int]] = [[] for _ in range(self.num_vertices)]
        for index, edge in enumerate(self.edges):
            for v in edge:
                lists[v].append(index)
        return tuple(tuple(l) for l in lists)

    def incident_edges(self, v: int, support: Optional[Iterable[int]] = None) -> List[int]:
        """delta(v), optionally restricted to a support"""
        if support is None:
            return list(self._incidence_lists[v])
        allowed = set(support)
        return [e for e in self._incidence_lists[v] if e in allowed]

    def degree(self, v: int, support: Optional[Iterable[int]] = None) -> int:
        return len(self.incident_edges(v, support))

    def incidence_matrix(self, support: Optional[Sequence[int]] = None) -> np.ndarray:
        """0-1 matrix with one row per vertex and one column per (support) edge"""
        columns = range(self.num_edges) if support is None else list(support)
        columns = list(columns)
        matrix = np.zeros((self.num_vertices, len(columns)), dtype=int)
        for j, e in enumerate(columns):
            matrix[list(self.edges[e]), j] = 1
        return matrix

    def loads(self, values: Sequence, demands: Optional[Sequence[int]] = None) -> List[Fraction]:
        """
        Vertex loads (A x)_v, or (A[d] x)_v when demands are given

        Args:
            values: Per-edge values (ints or Fractions)
            demands: Optional per-edge demand multipliers

        Returns:
            Exact load at every vertex
        """
        load = [Fraction(0)] * self.num_vertices
        for e, edge in enumerate(self.edges):
            value = as_fraction(values[e])
            if value == 0:
                continue
            if demands is not None:
                value *= demands[e]
            for v in edge:
                load[v] += value
        return load

    def has_independent_columns(self, support: Sequence[int]) -> bool:
        """Exact check that the incidence columns of support are linearly independent"""
        support = list(support)
        if not support:
            return True
        matrix = self.incidence_matrix(support)
        return exact_rank(matrix.tolist(), len(support)) == len(support)


@dataclass(frozen=True)
class BipartiteWitness:
    """The distinguished vertex set U met exactly once by every edge"""
    distinguished_set: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, 'distinguished_set',
                           frozenset(int(v) for v in self.distinguished_set))

    def is_valid_for(self, h: Hypergraph) -> bool:
        return check_bipartite_witness(h, self.distinguished_set)


def check_bipartite_witness(h: Hypergraph, u: Iterable[int]) -> bool:
    """
    True iff every edge of h contains exactly one vertex of u

    A u naming vertices outside h is never a valid witness.
    """
    u = frozenset(u)
    if any(not 0 <= v < h.num_vertices for v in u):
        return False
    return all(len(u.intersection(edge)) == 1 for edge in h.edges)
