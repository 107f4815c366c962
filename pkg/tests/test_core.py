"""
Tests for hypergraphs, instances, validation and the rho/mu parameters
"""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hypermatch.core import (
    BMatchInstance,
    DemandInstance,
    FractionalSolution,
    Hypergraph,
    IntegralSolution,
    SolveReport,
    check_bipartite_witness,
    effective_k,
    high_value_edge,
    integer_floor,
    is_feasible,
    is_fractionally_feasible,
    make_bmatch_instance,
    make_demand_instance,
    min_nonzero_degree_vertex,
    mu,
    rho,
    validate,
)
from hypermatch.oracle.random_instances import random_bmatch
from hypermatch.shared.config import Config
from hypermatch.shared.constants import Algorithm
from hypermatch.shared.errors import InvariantViolation, ValidationError


class TestHypergraph:
    def test_edges_are_sorted_and_sized(self):
        h = Hypergraph.from_edges(4, [(2, 0), (3, 1, 0)])
        assert h.edges == ((0, 2), (0, 1, 3))
        assert h.num_edges == 2
        assert h.k == 3

    def test_edgeless_hypergraph_has_k_zero(self):
        assert Hypergraph.from_edges(3, []).k == 0

    def test_empty_edge_rejected(self):
        with pytest.raises(ValidationError):
            Hypergraph.from_edges(2, [()])

    def test_repeated_vertex_rejected(self):
        with pytest.raises(ValidationError):
            Hypergraph.from_edges(2, [(1, 1)])

    def test_out_of_range_vertex_reports_vertex(self):
        with pytest.raises(ValidationError) as info:
            Hypergraph.from_edges(2, [(0, 5)])
        assert info.value.vertex == 5
        assert info.value.edge == 0

    def test_incidence_and_degrees(self, triangle):
        h = triangle.hypergraph
        assert h.incident_edges(0) == [0, 2]
        assert h.incident_edges(0, support=[2]) == [2]
        assert h.degree(1) == 2
        matrix = h.incidence_matrix()
        assert matrix.shape == (3, 3)
        assert matrix.sum(axis=0).tolist() == [2, 2, 2]

    def test_loads_with_demands(self):
        h = Hypergraph.from_edges(3, [(0, 1), (1, 2)])
        assert h.loads([Fraction(1, 2), 1]) == [Fraction(1, 2), Fraction(3, 2), Fraction(1)]
        assert h.loads([1, 1], demands=[2, 3]) == [2, 5, 3]

    def test_independent_columns(self, triangle):
        assert triangle.hypergraph.has_independent_columns([0, 1, 2])
        parallel = Hypergraph.from_edges(2, [(0, 1), (0, 1)])
        assert not parallel.has_independent_columns([0, 1])
        assert parallel.has_independent_columns([])


class TestBipartiteWitness:
    def test_valid_witness(self):
        h = Hypergraph.from_edges(4, [(0, 2), (1, 2, 3)])
        assert check_bipartite_witness(h, {0, 1})

    def test_edge_met_twice_is_invalid(self):
        h = Hypergraph.from_edges(3, [(0, 1, 2)])
        assert not check_bipartite_witness(h, {0, 1})

    def test_vertex_outside_range_is_invalid(self):
        h = Hypergraph.from_edges(2, [(0, 1)])
        assert not check_bipartite_witness(h, {0, 7})

    def test_invalid_witness_fails_validation(self):
        with pytest.raises(ValidationError):
            make_bmatch_instance(3, [(0, 1, 2)], b=(1, 1, 1), w=(1,), bipartite_u=(0, 1))

    def test_empty_witness_is_invalid(self, triangle):
        assert not check_bipartite_witness(triangle.hypergraph, set())

    def test_single_fano_point_is_invalid(self, fano):
        assert not check_bipartite_witness(fano.hypergraph, {0})

    def test_adding_a_vertex_breaks_the_witness(self, truncated):
        h = truncated.hypergraph
        u = set(truncated.bipartite_witness.distinguished_set)
        assert check_bipartite_witness(h, u)
        for v in set(range(h.num_vertices)) - u:
            assert not check_bipartite_witness(h, u | {v})


class TestValidation:
    def test_capacity_clipped_to_vertex_limits(self):
        instance = make_bmatch_instance(2, [(0, 1)], b=(2, 3), w=(1,), c=(5,))
        assert instance.c == (2,)

    def test_unbounded_capacity(self):
        instance = make_bmatch_instance(2, [(0, 1)], b=(4, 3), w=(1,), c=("inf",))
        assert instance.c == (3,)

    def test_negative_weight_rejected(self):
        with pytest.raises(ValidationError) as info:
            make_bmatch_instance(2, [(0, 1)], b=(1, 1), w=(-1,))
        assert info.value.edge == 0

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            make_bmatch_instance(2, [(0, 1)], b=(1,), w=(1,))

    def test_demand_no_clipping(self):
        with pytest.raises(ValidationError) as info:
            make_demand_instance(2, [(0, 1)], b=(3, 1), d=(2,), w=(1,))
        assert info.value.edge == 0
        assert info.value.vertex == 1

    def test_demand_rejects_general_capacities(self):
        h = Hypergraph.from_edges(2, [(0, 1)])
        with pytest.raises(ValidationError):
            validate(DemandInstance(h, (2, 2), (1,), (Fraction(1),), c=(2,)))

    @settings(max_examples=40, deadline=None)
    @given(b=st.lists(st.integers(0, 4), min_size=3, max_size=3),
           c=st.lists(st.one_of(st.integers(0, 5), st.just("inf")), min_size=2, max_size=2))
    def test_validate_is_idempotent(self, b, c):
        h = Hypergraph.from_edges(3, [(0, 1), (1, 2)])
        once = validate(BMatchInstance(h, tuple(b), tuple(c), (Fraction(1), Fraction(2))))
        assert validate(once) == once


class TestSolutions:
    def test_feasibility(self, triangle):
        assert is_feasible(triangle, IntegralSolution((1, 0, 0)))
        assert not is_feasible(triangle, IntegralSolution((1, 1, 0)))
        half = FractionalSolution((Fraction(1, 2),) * 3)
        assert is_fractionally_feasible(triangle, half)
        assert half.weight(triangle.w) == Fraction(3, 2)

    def test_integer_floor(self):
        x = FractionalSolution((Fraction(3, 2), Fraction(0), Fraction(2)))
        assert integer_floor(x).multiplicities == (1, 0, 2)

    def test_negative_multiplicity_rejected(self):
        with pytest.raises(ValidationError):
            IntegralSolution((0, -1))


class TestParameters:
    def test_rho_and_mu(self):
        assert rho(3) == Fraction(7, 3)
        assert rho(4) == Fraction(13, 4)
        assert rho(3, bipartite=True) == 2
        assert mu(3) == 3
        assert mu(3, bipartite=True) == 2

    def test_bipartite_needs_k_two(self):
        with pytest.raises(ValidationError):
            rho(1, bipartite=True)
        with pytest.raises(ValidationError):
            mu(0)

    def test_effective_k_floors(self):
        assert effective_k(Hypergraph.from_edges(2, []), False) == 1
        assert effective_k(Hypergraph.from_edges(2, [(0,)]), True) == 2

    def test_min_nonzero_degree_vertex_lowest_id(self, triangle):
        assert min_nonzero_degree_vertex(triangle.hypergraph, [0, 1, 2]) == 0
        assert min_nonzero_degree_vertex(triangle.hypergraph, [1]) == 1
        assert min_nonzero_degree_vertex(triangle.hypergraph, []) is None

    def test_degree_bound_assertion(self, fano):
        with pytest.raises(InvariantViolation):
            min_nonzero_degree_vertex(fano.hypergraph, range(7), degree_bound=2)

    def test_high_value_edge(self, triangle):
        x = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
        assert high_value_edge(triangle.hypergraph, [0, 1, 2], x, degree_bound=2) == (0, 2)

    def test_checks_can_be_switched_off(self, fano):
        Config.CHECK_INVARIANTS = False
        assert min_nonzero_degree_vertex(fano.hypergraph, range(7), degree_bound=2) == 0

    @pytest.mark.parametrize("seed", range(40))
    @pytest.mark.parametrize("bipartite", [False, True])
    def test_independent_columns_have_a_low_degree_vertex(self, seed, bipartite):
        rng = np.random.default_rng(seed)
        instance = random_bmatch(rng, int(rng.choice((2, 3, 4))), 8, 10, bipartite=bipartite)
        h = instance.hypergraph
        support = []
        for e in rng.permutation(h.num_edges):
            if h.has_independent_columns(support + [int(e)]):
                support.append(int(e))
        bound = mu(effective_k(h, bipartite), bipartite)
        v = min_nonzero_degree_vertex(h, support, degree_bound=bound)
        assert v is not None
        assert 1 <= h.degree(v, support) <= bound


class TestSolveReport:
    def test_certified_ratio_recomputed(self):
        report = SolveReport(Algorithm.HBM, Fraction(7, 3), Fraction(7, 3), 3, Fraction(1), Fraction(7, 3))
        assert report.certified_ratio == Fraction(7, 3)
        assert report.within_bound

    def test_zero_values(self):
        empty = SolveReport(Algorithm.HBM, Fraction(0), None, 1, Fraction(0), Fraction(1))
        assert empty.certified_ratio == 1
        broken = SolveReport(Algorithm.HBM, Fraction(1), None, 1, Fraction(0), Fraction(1))
        assert broken.certified_ratio is None
        assert not broken.within_bound
