"""
Degree bookkeeping for the modified packing step
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from hypermatch.core.hypergraph import Hypergraph
from hypermatch.core.instances import FractionalSolution, IntegralSolution
from hypermatch.packing.combination import AlphaConvexCombination
from hypermatch.shared.utils import frac_part


@dataclass(frozen=True)
class PackingContext:
    """x together with ceil((Ax)_v) and <(Ax)_v> for every vertex"""
    x: FractionalSolution
    degrees: Tuple[Fraction, ...]
    ceilings: Tuple[int, ...]
    fractional: Tuple[Fraction, ...]

    @classmethod
    def from_solution(cls, h: Hypergraph, x: FractionalSolution) -> 'PackingContext':
        degrees = tuple(h.loads(x.values))
        return cls(
            x=x,
            degrees=degrees,
            ceilings=tuple(math.ceil(d) for d in degrees),
            fractional=tuple(frac_part(d) for d in degrees),
        )

    def agrees_with(self, h: Hypergraph) -> bool:
        """Stored fields match a fresh recomputation from x"""
        return PackingContext.from_solution(h, self.x) == self

    def is_integral(self, v: int) -> bool:
        return self.fractional[v] == 0


def term_degrees(h: Hypergraph, solution: IntegralSolution) -> List[int]:
    """(A x^i)_v for every vertex"""
    return [int(d) for d in h.loads(solution.multiplicities)]


def check_step_conditions(comb: AlphaConvexCombination, h: Hypergraph,
                          ctx: PackingContext) -> List[str]:
    """
    Violations of the two invariants kept by modified packing steps

    (i)  A x^i <= ceil(A x) for every term;
    (ii) for every v with (A x)_v non-integral, the lambda-mass of terms
         whose degree at v equals ceil((A x)_v) is at most <(A x)_v>.

    Returns:
        Human-readable violation list, empty when both hold
    """
    problems = []
    at_ceiling = [Fraction(0)] * h.num_vertices
    for index, term in enumerate(comb.terms):
        degrees = term_degrees(h, term.solution)
        for v, deg in enumerate(degrees):
            if deg > ctx.ceilings[v]:
                problems.append(f"(i) term {index} has degree {deg} > {ctx.ceilings[v]} at vertex {v}")
            elif deg == ctx.ceilings[v]:
                at_ceiling[v] += term.weight
    for v in range(h.num_vertices):
        if not ctx.is_integral(v) and at_ceiling[v] > ctx.fractional[v]:
            problems.append(
                f"(ii) mass {at_ceiling[v]} at ceiling {ctx.ceilings[v]} exceeds "
                f"{ctx.fractional[v]} at vertex {v}")
    return problems


def recomposition_ok(comb: AlphaConvexCombination, x: Sequence[Fraction]) -> bool:
    """sum lambda_i x^i == x, recomputed from scratch"""
    return comb.recomputed_value() == [Fraction(v) for v in x]
