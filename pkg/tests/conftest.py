"""
Shared fixtures and instance builders
"""
from fractions import Fraction

import numpy as np
import pytest

from hypermatch.core import make_bmatch_instance, make_demand_instance
from hypermatch.oracle import gen_projective_plane, gen_truncated_plane
from hypermatch.shared.config import Config


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size random suites")


@pytest.fixture(autouse=True)
def check_invariants():
    """Every test runs with the exhaustive internal checks switched on"""
    previous = Config.CHECK_INVARIANTS
    Config.CHECK_INVARIANTS = True
    yield
    Config.CHECK_INVARIANTS = previous


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def triangle():
    """K3 with unit limits and weights: LP 3/2, ILP 1"""
    return make_bmatch_instance(3, [(0, 1), (1, 2), (0, 2)], b=(1, 1, 1), w=(1, 1, 1))


@pytest.fixture
def fano():
    return gen_projective_plane(2)


@pytest.fixture
def truncated():
    return gen_truncated_plane(2)


@pytest.fixture
def single_edge():
    return make_bmatch_instance(2, [(0, 1)], b=(1, 1), w=(5,))


@pytest.fixture
def what_example():
    """e = f = {0, 1}, b = (3, 5), d_e = 1, d_f = 2"""
    return make_demand_instance(2, [(0, 1), (0, 1)], b=(3, 5), d=(1, 2),
                                w=(Fraction(1), Fraction(1)))
