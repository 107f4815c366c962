"""
Finite geometry generators for the tight integrality-gap families
"""
import itertools
import logging
from typing import Dict, List, Tuple

import numpy as np

from hypermatch.core.hypergraph import BipartiteWitness, Hypergraph
from hypermatch.core.instances import BMatchInstance, validate
from hypermatch.shared.config import Config
from hypermatch.shared.errors import InvariantViolation, ValidationError

logger = logging.getLogger(__name__)

# q -> (p, monic irreducible polynomial, low degree first)
CONWAY_POLYNOMIALS: Dict[int, Tuple[int, Tuple[int, ...]]] = {
    4: (2, (1, 1, 1)),
    8: (2, (1, 1, 0, 1)),
    9: (3, (2, 2, 1)),
}
PRIMES = (2, 3, 5, 7)


class GaloisField:
    """
    GF(q) for the supported prime powers, with full addition and
    multiplication tables

    Element a stands for the polynomial sum_i a_i x^i where a_i are the
    base-p digits of a.
    """

    def __init__(self, q: int):
        if q not in Config.SUPPORTED_PRIME_POWERS:
            raise ValidationError(
                f"Unsupported field order {q}; expected one of {Config.SUPPORTED_PRIME_POWERS}")
        self.q = q
        if q in PRIMES:
            self.p, self.modulus = q, (0, 1)
        else:
            self.p, self.modulus = CONWAY_POLYNOMIALS[q]
        self.degree = len(self.modulus) - 1
        elements = range(q)
        self.add_table = np.array([[self._add(a, b) for b in elements] for a in elements], dtype=int)
        self.mul_table = np.array([[self._mul(a, b) for b in elements] for a in elements], dtype=int)

    def _digits(self, a: int) -> List[int]:
        return [(a // self.p ** i) % self.p for i in range(self.degree)]

    def _number(self, digits: List[int]) -> int:
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _add(self, a: int, b: int) -> int:
        return self._number([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _mul(self, a: int, b: int) -> int:
        product = [0] * (2 * self.degree - 1)
        for i, x in enumerate(self._digits(a)):
            for j, y in enumerate(self._digits(b)):
                product[i + j] = (product[i + j] + x * y) % self.p
        # reduce by the monic modulus from the top down
        for top in range(len(product) - 1, self.degree - 1, -1):
            coefficient = product[top]
            if coefficient:
                for i, m in enumerate(self.modulus):
                    position = top - self.degree + i
                    product[position] = (product[position] - coefficient * m) % self.p
        return self._number(product[:self.degree])

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(np.flatnonzero(self.add_table[a] == 0)[0])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def dot(self, u, v) -> int:
        total = 0
        for a, b in zip(u, v):
            total = self.add(total, self.mul(a, b))
        return total

    def is_field(self) -> bool:
        """Every nonzero element has a multiplicative inverse"""
        return all((self.mul_table[a, 1:] == 1).any() for a in range(1, self.q))


def projective_points(field: GaloisField) -> List[Tuple[int, int, int]]:
    """Normalized points of PG(2,q): (1,y,z), then (0,1,z), then (0,0,1)"""
    q = field.q
    points = [(1, y, z) for y, z in itertools.product(range(q), repeat=2)]
    points += [(0, 1, z) for z in range(q)]
    points.append((0, 0, 1))
    return points


def _assert_pairwise(edges: List[Tuple[int, ...]], expected: int, what: str):
    for (i, a), (j, b) in itertools.combinations(enumerate(edges), 2):
        shared = len(set(a).intersection(b))
        if shared != expected:
            raise InvariantViolation(f"{what}: edges {i} and {j} share {shared} vertices",
                                     state={'edges': [list(e) for e in edges]})


def gen_projective_plane(q: int) -> BMatchInstance:
    """
    Points of PG(2,q) as vertices and its lines as edges

    q^2 + q + 1 vertices and edges, every edge of size q + 1, b = c = w = 1.
    """
    field = GaloisField(q)
    points = projective_points(field)
    edges = [tuple(i for i, point in enumerate(points) if field.dot(point, line) == 0)
             for line in points]
    if Config.CHECK_INVARIANTS:
        if any(len(edge) != q + 1 for edge in edges):
            raise InvariantViolation(f"PG(2,{q}) has a line without {q + 1} points")
        _assert_pairwise(edges, 1, f"PG(2,{q})")
    n = len(points)
    hypergraph = Hypergraph.from_edges(n, edges)
    logger.debug("generated PG(2,%d): %d points, %d lines", q, n, len(edges))
    return validate(BMatchInstance(hypergraph, (1,) * n, (1,) * n, (1,) * n))


def gen_truncated_plane(q: int) -> BMatchInstance:
    """
    Hypergraphic dual of AG(2,q)

    Vertices are the q^2 + q affine lines: y = m x + c is vertex m q + c and
    x = c is vertex q^2 + c. Edge x q + y is the point (x, y) and contains the
    q + 1 lines through it. The vertical lines form the bipartite witness.
    """
    field = GaloisField(q)
    n = q * q + q
    edges = []
    for x, y in itertools.product(range(q), repeat=2):
        lines = [m * q + field.sub(y, field.mul(m, x)) for m in range(q)]
        lines.append(q * q + x)
        edges.append(tuple(sorted(lines)))
    if Config.CHECK_INVARIANTS:
        _assert_pairwise(edges, 1, f"dual AG(2,{q})")
    hypergraph = Hypergraph.from_edges(n, edges)
    witness = BipartiteWitness(frozenset(range(q * q, n)))
    logger.debug("generated dual AG(2,%d): %d lines, %d points", q, n, len(edges))
    return validate(BMatchInstance(hypergraph, (1,) * n, (1,) * len(edges), (1,) * len(edges), witness))
