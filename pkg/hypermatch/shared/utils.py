"""
Utility functions for exact rational arithmetic
"""
import math
from fractions import Fraction
from typing import Iterable, List, Sequence

import numpy as np
import sympy


def as_fraction(value) -> Fraction:
    """Coerce int / Fraction / sympy Rational to Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted here")
    return Fraction(value)


def frac_part(value: Fraction) -> Fraction:
    """<q> = q - floor(q), always in [0, 1)"""
    return value - math.floor(value)


def ceil_int(value: Fraction) -> int:
    """Exact ceiling"""
    return math.ceil(value)


def is_integral(value: Fraction) -> bool:
    return Fraction(value).denominator == 1


def rational_array(values: Iterable) -> np.ndarray:
    """1-D object array of Fractions"""
    return np.array([as_fraction(v) for v in values], dtype=object)


def dot(a: Sequence, b: Sequence) -> Fraction:
    """Exact inner product"""
    return sum((as_fraction(x) * as_fraction(y) for x, y in zip(a, b)), Fraction(0))


def _sympy_matrix(rows: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix([
        [sympy.Rational(as_fraction(v).numerator, as_fraction(v).denominator) for v in row]
        for row in rows
    ])


def exact_rank(rows: Sequence[Sequence], num_columns: int) -> int:
    """
    Rank of a rational matrix given as a list of rows

    Args:
        rows: Matrix rows (may be empty)
        num_columns: Column count, needed when rows is empty

    Returns:
        Exact rank
    """
    if not rows or num_columns == 0:
        return 0
    return int(_sympy_matrix(rows).rank())


def exact_nullspace(rows: Sequence[Sequence], num_columns: int) -> List[List[Fraction]]:
    """Basis of {y : M y = 0} with Fraction entries"""
    if num_columns == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for i in range(num_columns)]
                for j in range(num_columns)]
    basis = _sympy_matrix(rows).nullspace()
    return [[as_fraction(v) for v in vec] for vec in basis]
