"""
Alpha-convex combinations of integral solutions and the plain packing step
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from hypermatch.core.instances import IntegralSolution
from hypermatch.shared.errors import EmptyCombinationError, InsufficientMassError, ValidationError
from hypermatch.shared.utils import as_fraction

logger = logging.getLogger(__name__)


@dataclass
class Term:
    """One (lambda_i, x^i) pair; weight is always > 0"""
    weight: Fraction
    solution: IntegralSolution


class AlphaConvexCombination:
    """
    Terms (lambda_i, x^i) with sum lambda_i = alpha.

    The combination value sum lambda_i x^i is kept incrementally; mutating
    operations in this module update it in place.
    """

    def __init__(self, alpha: Fraction, terms: Iterable[Term], num_edges: int):
        self.alpha = as_fraction(alpha)
        self.terms: List[Term] = list(terms)
        self.num_edges = num_edges
        self._value = self.recomputed_value()

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, index: int) -> Term:
        return self.terms[index]

    @property
    def value(self) -> Tuple[Fraction, ...]:
        """sum_i lambda_i x^i"""
        return tuple(self._value)

    def total_mass(self) -> Fraction:
        return sum((t.weight for t in self.terms), Fraction(0))

    def recomputed_value(self) -> List[Fraction]:
        value = [Fraction(0)] * self.num_edges
        for term in self.terms:
            for e, m in enumerate(term.solution.multiplicities):
                if m:
                    value[e] += term.weight * m
        return value

    def mass_of(self, indices: Iterable[int]) -> Fraction:
        return sum((self.terms[i].weight for i in indices), Fraction(0))

    def copy(self) -> 'AlphaConvexCombination':
        return AlphaConvexCombination(
            self.alpha, [Term(t.weight, t.solution) for t in self.terms], self.num_edges)

    def add_to_value(self, e: int, amount: Fraction):
        self._value[e] += amount

    def check(self) -> List[str]:
        """Violations of the type invariants (empty when consistent)"""
        problems = []
        if self.total_mass() != self.alpha:
            problems.append(f"sum of lambda {self.total_mass()} != alpha {self.alpha}")
        if any(t.weight <= 0 for t in self.terms):
            problems.append("nonpositive lambda")
        if self.recomputed_value() != list(self._value):
            problems.append("incremental value drifted from recomputed value")
        return problems

    def dump(self) -> dict:
        """JSON-friendly state for error reports"""
        return {
            'alpha': str(self.alpha),
            'terms': [[str(t.weight), t.solution.edges()] for t in self.terms],
            'value': [str(v) for v in self._value],
        }


def trivial_combination(alpha, num_edges: int = 0) -> AlphaConvexCombination:
    """Single term (alpha, 0)"""
    alpha = as_fraction(alpha)
    if alpha < 1:
        raise ValidationError(f"alpha must be at least 1, got {alpha}")
    return AlphaConvexCombination(alpha, [Term(alpha, IntegralSolution.zeros(num_edges))], num_edges)


def split_term(comb: AlphaConvexCombination, index: int, portion) -> AlphaConvexCombination:
    """
    Replace term index by (portion, x^i) and (lambda_i - portion, x^i)

    The second piece is inserted right after the first. Mutates comb.
    """
    portion = as_fraction(portion)
    term = comb.terms[index]
    if not 0 < portion < term.weight:
        raise ValidationError(f"Split portion {portion} outside (0, {term.weight})")
    comb.terms[index] = Term(portion, term.solution)
    comb.terms.insert(index + 1, Term(term.weight - portion, term.solution))
    return comb


def merge_identical(comb: AlphaConvexCombination) -> AlphaConvexCombination:
    """Merge terms with equal solutions, keeping first-occurrence order"""
    merged: List[Term] = []
    position = {}
    for term in comb.terms:
        key = term.solution.multiplicities
        if key in position:
            merged[position[key]].weight += term.weight
        else:
            position[key] = len(merged)
            merged.append(Term(term.weight, term.solution))
    return AlphaConvexCombination(comb.alpha, merged, comb.num_edges)


def pack_into(comb: AlphaConvexCombination, e: int, t: Fraction,
              eligible: Sequence[bool]) -> AlphaConvexCombination:
    """
    Move lambda-mass t onto x^i + chi_e over eligible terms in index order

    At most one term is split. Mutates comb.

    Raises:
        InsufficientMassError: eligible mass below t
    """
    t = as_fraction(t)
    if t == 0:
        return comb
    room = sum((term.weight for term, ok in zip(comb.terms, eligible) if ok), Fraction(0))
    if room < t:
        raise InsufficientMassError(
            f"Packable mass {room} below requested {t} for edge {e}",
            state={'edge': e, 't': str(t), 'room': str(room),
                   'eligible': list(eligible), 'combination': comb.dump()})
    remaining = t
    terms: List[Term] = []
    for term, ok in zip(comb.terms, eligible):
        if not ok or remaining == 0:
            terms.append(term)
            continue
        packed = term.solution.with_edge(e)
        if term.weight <= remaining:
            terms.append(Term(term.weight, packed))
            remaining -= term.weight
        else:
            terms.append(Term(remaining, packed))
            terms.append(Term(term.weight - remaining, term.solution))
            remaining = Fraction(0)
    comb.terms = terms
    comb.add_to_value(e, t)
    return comb


def packing_step(comb: AlphaConvexCombination, e: int, t,
                 feasibility: Callable[[IntegralSolution], bool]) -> AlphaConvexCombination:
    """
    Pack mass t of edge e into the terms where x^i + chi_e stays feasible

    Args:
        comb: Combination to mutate
        e: Edge index
        t: Mass to move
        feasibility: Predicate on x^i + chi_e

    Returns:
        The same combination, updated
    """
    t = as_fraction(t)
    if t == 0:
        return comb
    eligible = [feasibility(term.solution.with_edge(e)) for term in comb.terms]
    return pack_into(comb, e, t, eligible)


def has_packing_room(alpha, k: int, t) -> bool:
    """Simple-matching room bound: packing mass t always succeeds when alpha >= k - (k-1) t"""
    return as_fraction(alpha) >= k - (k - 1) * as_fraction(t)


def best_term(comb: AlphaConvexCombination, w: Sequence[Fraction]) -> Tuple[IntegralSolution, Fraction]:
    """Term maximizing w . x^i, lowest index on ties"""
    if not comb.terms:
        raise EmptyCombinationError("best_term of an empty combination")
    best_index = 0
    best_value = comb.terms[0].solution.weight(w)
    for i, term in enumerate(comb.terms[1:], start=1):
        value = term.solution.weight(w)
        if value > best_value:
            best_index, best_value = i, value
    return comb.terms[best_index].solution, best_value


def expected_value(comb: AlphaConvexCombination, w: Sequence[Fraction]) -> Fraction:
    """sum_i (lambda_i / alpha) w . x^i, exactly"""
    if not comb.terms:
        raise EmptyCombinationError("expected_value of an empty combination")
    total = sum((t.weight * t.solution.weight(w) for t in comb.terms), Fraction(0))
    return total / comb.alpha


def uniform_below(rng: np.random.Generator, bound: int) -> int:
    """Exact uniform integer in [0, bound) for arbitrarily large bound"""
    if bound <= 2 ** 62:
        return int(rng.integers(0, bound))
    bits = bound.bit_length()
    while True:
        value = 0
        drawn = 0
        while drawn < bits:
            chunk = min(62, bits - drawn)
            value = (value << chunk) | int(rng.integers(0, 2 ** chunk))
            drawn += chunk
        if value < bound:
            return value


def sample_index(comb: AlphaConvexCombination, seed: Optional[int] = 0) -> int:
    """Draw index i with probability exactly lambda_i / alpha"""
    if not comb.terms:
        raise EmptyCombinationError("sample_term of an empty combination")
    probabilities = [t.weight / comb.alpha for t in comb.terms]
    denominator = math.lcm(*(p.denominator for p in probabilities))
    numerators = [int(p * denominator) for p in probabilities]
    draw = uniform_below(np.random.default_rng(seed), denominator)
    cumulative = 0
    for i, numerator in enumerate(numerators):
        cumulative += numerator
        if draw < cumulative:
            return i
    return len(numerators) - 1


def sample_term(comb: AlphaConvexCombination, seed: Optional[int] = 0) -> IntegralSolution:
    """Seeded draw of x^i with probability lambda_i / alpha"""
    return comb.terms[sample_index(comb, seed)].solution
