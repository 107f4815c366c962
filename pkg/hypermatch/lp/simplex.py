"""
Exact primal simplex with Bland's rule over Fractions
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from hypermatch.core.instances import FractionalSolution
from hypermatch.lp.program import LinearProgram
from hypermatch.shared.config import Config
from hypermatch.shared.errors import InvariantViolation, ValidationError
from hypermatch.shared.utils import exact_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LpResult:
    """Optimal vertex x* with its value and the tight constraints certifying it"""
    value: Fraction
    solution: FractionalSolution
    tight: Tuple[Tuple[str, int], ...]
    lp: LinearProgram
    pivots: int = 0

    def certificate_rank(self) -> int:
        """Rank of the tight constraint rows; equals num_variables at a vertex"""
        matrix = self.lp.constraint_matrix(self.tight)
        return exact_rank(matrix, self.lp.num_variables)


class SimplexTableau:
    """
    Dictionary-form tableau: x_B[i] = b[i] - sum_j A[i][j] x_N[j],
    z = z + sum_j c[j] x_N[j].

    Variables 0..n-1 are structural, n.. are slacks.
    """

    def __init__(self, A: List[List[Fraction]], b: List[Fraction], c: List[Fraction]):
        self.m = len(A)
        self.n = len(c)
        self.A = [list(row) for row in A]
        self.b = list(b)
        self.c = list(c)
        self.z = Fraction(0)
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int):
        """Exchange basic b_vars[i] with nonbasic nb_vars[j]"""
        piv = self.A[i][j]
        delta = self.c[j] / piv
        logger.debug("pivot %d -> %d (row %d, col %d)", self.b_vars[i], self.nb_vars[j], i, j)
        # objective
        self.z += delta * self.b[i]
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta
        # pivot row
        for l in range(self.n):
            self.A[i][l] = 1 / piv if l == j else self.A[i][l] / piv
        self.b[i] /= piv
        # other rows
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if f == 0:
                continue
            for l in range(self.n):
                self.A[k][l] = -f / piv if l == j else self.A[k][l] - f * self.A[i][l]
            self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_primal_step(self) -> str:
        """One Bland iteration; returns 'optimal', 'unbounded' or 'go_on'"""
        candidates = [(self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0]
        if not candidates:
            return 'optimal'
        _, j = min(candidates)
        ratios = [(self.b[i] / self.A[i][j], self.b_vars[i], i)
                  for i in range(self.m) if self.A[i][j] > 0]
        if not ratios:
            return 'unbounded'
        _, _, i = min(ratios)
        self.pivot(i, j)
        return 'go_on'

    def bland_primal(self) -> str:
        while True:
            status = self.bland_primal_step()
            if status != 'go_on':
                return status

    def primal_values(self) -> List[Fraction]:
        """Values of the structural variables at the current basis"""
        values = [Fraction(0)] * self.n
        for i, var in enumerate(self.b_vars):
            if var < self.n:
                values[var] = self.b[i]
        return values


def solve_to_vertex(lp: LinearProgram) -> LpResult:
    """
    Exact optimal vertex of a packing-type LP

    Shifts variables by their lower bounds and starts from that origin, which
    must be feasible (true for every packing LP built here). Upper bounds
    become explicit rows.

    Raises:
        ValidationError: origin infeasible (malformed input) or unbounded LP
        InvariantViolation: returned point fails the vertex certificate
    """
    n = lp.num_variables
    if n == 0:
        return LpResult(Fraction(0), FractionalSolution(()), (), lp)

    A: List[List[Fraction]] = []
    b: List[Fraction] = []
    for i, row in enumerate(lp.rows):
        shifted = lp.rhs[i] - sum((a * lo for a, lo in zip(row, lp.lower)), Fraction(0))
        A.append(list(row))
        b.append(shifted)
    for j in range(n):
        if lp.upper[j] is None:
            continue
        A.append([Fraction(int(l == j)) for l in range(n)])
        b.append(lp.upper[j] - lp.lower[j])
    if any(v < 0 for v in b):
        raise ValidationError("Malformed LP: the lower-bound corner is infeasible")

    tableau = SimplexTableau(A, b, list(lp.objective))
    status = tableau.bland_primal()
    if status == 'unbounded':
        raise ValidationError("Malformed LP: objective is unbounded")

    values = [lo + y for lo, y in zip(lp.lower, tableau.primal_values())]
    value = lp.value(values)
    if value != tableau.z + lp.value(lp.lower):
        raise InvariantViolation("Objective bookkeeping drifted",
                                 state={'tableau_z': str(tableau.z), 'value': str(value)})
    tight = lp.tight_constraints(values)
    result = LpResult(value, FractionalSolution(tuple(values)), tight, lp, tableau.pivots)

    if Config.CHECK_INVARIANTS:
        if not lp.is_feasible(values):
            raise InvariantViolation("Simplex returned an infeasible point",
                                     state={'x': [str(v) for v in values]})
        if result.certificate_rank() != n:
            raise InvariantViolation("Simplex returned a non-vertex point",
                                     state={'x': [str(v) for v in values], 'tight': list(tight)})
    logger.info("LP solved: value=%s after %d pivots", value, tableau.pivots)
    return result
