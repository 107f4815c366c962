"""
Naive LP relaxations as exact rational linear programs
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from hypermatch.core.instances import BMatchInstance, DemandInstance
from hypermatch.shared.errors import ValidationError
from hypermatch.shared.utils import as_fraction


@dataclass(frozen=True)
class LinearProgram:
    """
    max objective . x  s.t.  rows x <= rhs,  lower <= x <= upper

    An upper bound of None means the variable is unbounded above.
    """
    objective: Tuple[Fraction, ...]
    rows: Tuple[Tuple[Fraction, ...], ...]
    rhs: Tuple[Fraction, ...]
    lower: Tuple[Fraction, ...]
    upper: Tuple[Optional[Fraction], ...]
    row_labels: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = len(self.objective)
        object.__setattr__(self, 'objective', tuple(as_fraction(v) for v in self.objective))
        object.__setattr__(self, 'rows', tuple(tuple(as_fraction(v) for v in r) for r in self.rows))
        object.__setattr__(self, 'rhs', tuple(as_fraction(v) for v in self.rhs))
        object.__setattr__(self, 'lower', tuple(as_fraction(v) for v in self.lower))
        object.__setattr__(self, 'upper', tuple(
            None if v is None else as_fraction(v) for v in self.upper))
        if len(self.rhs) != len(self.rows):
            raise ValidationError("Malformed LP: rhs length differs from row count")
        if any(len(r) != n for r in self.rows):
            raise ValidationError("Malformed LP: row length differs from variable count")
        if len(self.lower) != n or len(self.upper) != n:
            raise ValidationError("Malformed LP: bounds length differs from variable count")
        for j, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if hi is not None and lo > hi:
                raise ValidationError(f"Malformed LP: variable {j} has lower > upper")
        if not self.row_labels:
            object.__setattr__(self, 'row_labels', tuple(f"row{i}" for i in range(len(self.rows))))

    @property
    def num_variables(self) -> int:
        return len(self.objective)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * as_fraction(v) for c, v in zip(self.objective, x)), Fraction(0))

    def row_activity(self, i: int, x: Sequence[Fraction]) -> Fraction:
        return sum((a * as_fraction(v) for a, v in zip(self.rows[i], x)), Fraction(0))

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        """Exact check of every row and bound"""
        if len(x) != self.num_variables:
            return False
        for j, v in enumerate(x):
            if v < self.lower[j] or (self.upper[j] is not None and v > self.upper[j]):
                return False
        return all(self.row_activity(i, x) <= self.rhs[i] for i in range(self.num_rows))

    def tight_constraints(self, x: Sequence[Fraction]) -> Tuple[Tuple[str, int], ...]:
        """Labels ('row', i), ('lower', j), ('upper', j) of constraints met with equality"""
        tight = [('row', i) for i in range(self.num_rows) if self.row_activity(i, x) == self.rhs[i]]
        tight += [('lower', j) for j in range(self.num_variables) if x[j] == self.lower[j]]
        tight += [('upper', j) for j in range(self.num_variables)
                  if self.upper[j] is not None and x[j] == self.upper[j]]
        return tuple(tight)

    def constraint_matrix(self, labels: Sequence[Tuple[str, int]]):
        """Coefficient rows of the given constraints"""
        matrix = []
        for kind, index in labels:
            if kind == 'row':
                matrix.append(list(self.rows[index]))
            else:
                matrix.append([Fraction(int(j == index)) for j in range(self.num_variables)])
        return matrix


def _incidence_rows(h, multipliers: Sequence[int]) -> Tuple[Tuple[Fraction, ...], ...]:
    rows = []
    for v in range(h.num_vertices):
        row = [Fraction(0)] * h.num_edges
        for e in h.incident_edges(v):
            row[e] = Fraction(multipliers[e])
        rows.append(tuple(row))
    return tuple(rows)


def build_bmatch_lp(instance: BMatchInstance) -> LinearProgram:
    """
    {max w x : 0 <= x <= c, A x <= b} for a validated instance

    One variable per edge, one row per vertex.
    """
    h = instance.hypergraph
    return LinearProgram(
        objective=tuple(instance.w),
        rows=_incidence_rows(h, (1,) * h.num_edges),
        rhs=tuple(Fraction(x) for x in instance.b),
        lower=(Fraction(0),) * h.num_edges,
        upper=tuple(Fraction(c) for c in instance.c),
        row_labels=tuple(f"vertex{v}" for v in range(h.num_vertices)),
    )


def build_demand_lp(instance: DemandInstance) -> LinearProgram:
    """{max w x : 0 <= x <= 1, A[d] x <= b}; column e of A scaled by d_e"""
    h = instance.hypergraph
    return LinearProgram(
        objective=tuple(instance.w),
        rows=_incidence_rows(h, instance.d),
        rhs=tuple(Fraction(x) for x in instance.b),
        lower=(Fraction(0),) * h.num_edges,
        upper=(Fraction(1),) * h.num_edges,
        row_labels=tuple(f"vertex{v}" for v in range(h.num_vertices)),
    )


def build_lp(instance) -> LinearProgram:
    """Dispatch on instance kind"""
    if isinstance(instance, DemandInstance):
        return build_demand_lp(instance)
    return build_bmatch_lp(instance)