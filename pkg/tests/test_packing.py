"""
Tests for alpha-convex combinations, packing steps and Algorithm HbM
"""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hypermatch.core import FractionalSolution, Hypergraph, IntegralSolution, is_feasible
from hypermatch.core.instances import BMatchInstance, validate
from hypermatch.oracle.random_instances import random_bmatch
from hypermatch.packing import (
    AlphaConvexCombination,
    PackingContext,
    Term,
    best_term,
    caratheodory_prune,
    check_step_conditions,
    decompose,
    expected_value,
    has_packing_room,
    hbm_core,
    merge_identical,
    modified_packing_step,
    pack_into,
    packing_step,
    recomposition_ok,
    sample_index,
    sample_term,
    split_term,
    term_degrees,
    trivial_combination,
)
from hypermatch.shared.errors import (
    EmptyCombinationError,
    InsufficientMassError,
    ValidationError,
)


def unit(num_edges, *edges):
    values = [0] * num_edges
    for e in edges:
        values[e] += 1
    return IntegralSolution(tuple(values))


def assert_sound(instance, decomposition):
    """Every guarantee a decomposition promises, checked from scratch"""
    lp_result, comb = decomposition
    assert comb.total_mass() == comb.alpha
    assert all(t.weight > 0 for t in comb.terms)
    assert recomposition_ok(comb, lp_result.solution.values)
    assert all(is_feasible(instance, t.solution) for t in comb.terms)
    _, best = best_term(comb, instance.w)
    assert best * comb.alpha >= lp_result.value
    assert expected_value(comb, instance.w) * comb.alpha == lp_result.value


@st.composite
def matching_points(draw):
    """A small hypergraph with edges of size <= 3 and a point of its matching polytope"""
    k = draw(st.integers(1, 3))
    n = draw(st.integers(k, 6))
    edges = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=1, max_size=k, unique=True),
                          min_size=1, max_size=6))
    numerators = draw(st.lists(st.integers(1, 4), min_size=len(edges), max_size=len(edges)))
    h = Hypergraph.from_edges(n, edges)
    scale = int(max(max(h.loads(numerators)), max(numerators)))
    return h, [Fraction(m, scale) for m in numerators]


def is_matching(h, solution):
    return max(solution.multiplicities) <= 1 and all(load <= 1 for load in h.loads(solution.multiplicities))


class TestCombination:
    def test_trivial(self):
        comb = trivial_combination(Fraction(7, 3), 2)
        assert len(comb) == 1
        assert comb.value == (0, 0)
        assert comb.check() == []

    def test_alpha_below_one_rejected(self):
        with pytest.raises(ValidationError):
            trivial_combination(Fraction(1, 2))

    @settings(max_examples=50, deadline=None)
    @given(numerator=st.integers(1, 29), denominator=st.integers(1, 10))
    def test_split_conserves_mass_and_value(self, numerator, denominator):
        comb = AlphaConvexCombination(Fraction(3), [Term(Fraction(3), unit(2, 0))], 2)
        portion = Fraction(numerator, denominator)
        if not 0 < portion < 3:
            with pytest.raises(ValidationError):
                split_term(comb, 0, portion)
            return
        split_term(comb, 0, portion)
        assert [t.weight for t in comb.terms] == [portion, 3 - portion]
        assert comb.check() == []

    def test_merge_identical(self):
        comb = AlphaConvexCombination(Fraction(2), [
            Term(Fraction(1, 2), unit(2, 0)),
            Term(Fraction(1), unit(2)),
            Term(Fraction(1, 2), unit(2, 0)),
        ], 2)
        merged = merge_identical(comb)
        assert [(t.weight, t.solution.edges()) for t in merged.terms] == [
            (Fraction(1), [0]), (Fraction(1), [])]

    def test_pack_into_splits_at_most_one_term(self):
        comb = trivial_combination(Fraction(2), 1)
        pack_into(comb, 0, Fraction(1, 3), [True])
        assert [(t.weight, t.solution.edges()) for t in comb.terms] == [
            (Fraction(1, 3), [0]), (Fraction(5, 3), [])]
        assert comb.value == (Fraction(1, 3),)

    def test_pack_into_without_room(self):
        comb = trivial_combination(Fraction(1), 1)
        with pytest.raises(InsufficientMassError) as info:
            pack_into(comb, 0, Fraction(1, 2), [False])
        assert info.value.state['room'] == '0'

    def test_packing_step_respects_feasibility(self, triangle):
        comb = trivial_combination(Fraction(3, 2), 3)
        feasible = lambda s: is_feasible(triangle, s)
        packing_step(comb, 0, Fraction(1, 2), feasible)
        packing_step(comb, 1, Fraction(1, 2), feasible)
        packing_step(comb, 2, Fraction(1, 2), feasible)
        assert comb.value == (Fraction(1, 2),) * 3
        assert all(is_feasible(triangle, t.solution) for t in comb.terms)

    def test_packing_room(self):
        assert has_packing_room(Fraction(3, 2), 2, Fraction(1, 2))
        assert not has_packing_room(Fraction(1), 2, Fraction(1, 2))
        assert has_packing_room(Fraction(1), 3, Fraction(1))

    @settings(max_examples=60, deadline=None)
    @given(point=matching_points())
    def test_packing_step_finds_room_at_the_room_bound(self, point):
        h, x = point
        k = h.k
        alpha = k - (k - 1) * min(x)
        assert all(has_packing_room(alpha, k, t) for t in x)
        comb = trivial_combination(alpha, h.num_edges)
        for e, t in enumerate(x):
            packing_step(comb, e, t, lambda s: is_matching(h, s))
        assert recomposition_ok(comb, x)
        assert comb.check() == []
        assert all(is_matching(h, t.solution) for t in comb.terms)

    def test_best_term_ties_take_lowest_index(self):
        comb = AlphaConvexCombination(Fraction(2), [
            Term(Fraction(1), unit(2, 1)), Term(Fraction(1), unit(2, 0))], 2)
        solution, value = best_term(comb, (Fraction(1), Fraction(1)))
        assert solution.edges() == [1]
        assert value == 1

    def test_empty_combination(self):
        comb = AlphaConvexCombination(Fraction(1), [], 0)
        with pytest.raises(EmptyCombinationError):
            best_term(comb, ())
        with pytest.raises(EmptyCombinationError):
            sample_term(comb)

    def test_sampling_is_seeded(self):
        comb = AlphaConvexCombination(Fraction(3), [
            Term(Fraction(1, 3), unit(3, 0)),
            Term(Fraction(2, 3), unit(3, 1)),
            Term(Fraction(2), unit(3, 2)),
        ], 3)
        draws = [sample_index(comb, seed) for seed in range(30)]
        assert draws == [sample_index(comb, seed) for seed in range(30)]
        assert set(draws) <= {0, 1, 2}
        assert sample_term(comb, 4) == comb.terms[draws[4]].solution

    def test_sampling_frequencies(self):
        comb = AlphaConvexCombination(Fraction(2), [
            Term(Fraction(1, 2), unit(1)), Term(Fraction(3, 2), unit(1, 0))], 1)
        hits = sum(sample_index(comb, seed) for seed in range(2000))
        assert 0.68 < hits / 2000 < 0.82


class TestModifiedPacking:
    def test_fano_result_keeps_conditions(self, fano):
        h = fano.hypergraph
        x = FractionalSolution((Fraction(1, 3),) * 7)
        comb = hbm_core(h, range(7), x)
        assert check_step_conditions(comb, h, PackingContext.from_solution(h, x)) == []

    def test_single_step_from_empty(self, triangle):
        h = triangle.hypergraph
        comb = trivial_combination(Fraction(3, 2), 3)
        before = PackingContext.from_solution(h, FractionalSolution.zeros(3))
        after = PackingContext.from_solution(h, FractionalSolution((Fraction(1, 2), 0, 0)))
        modified_packing_step(comb, h, 0, Fraction(1, 2), before, after)
        assert [(t.weight, t.solution.edges()) for t in comb.terms] == [
            (Fraction(1, 2), [0]), (Fraction(1), [])]

    def test_same_ceiling_blocks_terms_at_the_ceiling(self):
        # vertex 0 goes from 5/4 to 7/4 with b_0 = 2
        h = Hypergraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        comb = AlphaConvexCombination(Fraction(2), [
            Term(Fraction(1, 4), unit(3, 0, 1)),
            Term(Fraction(1, 2), unit(3, 0)),
            Term(Fraction(1, 4), unit(3, 1)),
            Term(Fraction(1), unit(3)),
        ], 3)
        x_before = FractionalSolution((Fraction(3, 4), Fraction(1, 2), Fraction(0)))
        x_after = FractionalSolution((Fraction(3, 4), Fraction(1, 2), Fraction(1, 2)))
        before = PackingContext.from_solution(h, x_before)
        after = PackingContext.from_solution(h, x_after)
        assert before.ceilings[0] == after.ceilings[0] == 2
        modified_packing_step(comb, h, 2, Fraction(1, 2), before, after)
        assert [(t.weight, t.solution.edges()) for t in comb.terms] == [
            (Fraction(1, 4), [0, 1]), (Fraction(1, 2), [0, 2]), (Fraction(1, 4), [1]), (Fraction(1), [])]
        assert [term_degrees(h, t.solution)[0] for t in comb.terms] == [2, 2, 1, 0]
        assert check_step_conditions(comb, h, after) == []

    def test_rising_ceiling_blocks_mass_one_minus_t(self):
        # vertex 0 goes from 3/4 to 5/4; the blocked mass 1/2 is cut out of the 3/4 term
        h = Hypergraph.from_edges(3, [(0, 1), (0, 2)])
        comb = AlphaConvexCombination(Fraction(2), [
            Term(Fraction(3, 4), unit(2, 0)), Term(Fraction(5, 4), unit(2))], 2)
        before = PackingContext.from_solution(h, FractionalSolution((Fraction(3, 4), Fraction(0))))
        after = PackingContext.from_solution(h, FractionalSolution((Fraction(3, 4), Fraction(1, 2))))
        modified_packing_step(comb, h, 1, Fraction(1, 2), before, after)
        assert [(t.weight, t.solution.edges()) for t in comb.terms] == [
            (Fraction(1, 2), [0]), (Fraction(1, 4), [0, 1]), (Fraction(1, 4), [1]), (Fraction(1), [])]
        blocked_mass = sum(t.weight for t in comb.terms if t.solution.edges() == [0])
        assert blocked_mass == 1 - Fraction(1, 2)
        assert [term_degrees(h, t.solution)[0] for t in comb.terms] == [1, 2, 1, 0]
        assert check_step_conditions(comb, h, after) == []

    def test_rising_ceiling_from_integral_degree_blocks_nothing(self):
        # vertex 0 goes from 1 to 3/2
        h = Hypergraph.from_edges(3, [(0, 1), (0, 2)])
        comb = AlphaConvexCombination(Fraction(2), [
            Term(Fraction(1), unit(2, 0)), Term(Fraction(1), unit(2))], 2)
        before = PackingContext.from_solution(h, FractionalSolution((Fraction(1), Fraction(0))))
        after = PackingContext.from_solution(h, FractionalSolution((Fraction(1), Fraction(1, 2))))
        assert before.is_integral(0) and not after.is_integral(0)
        modified_packing_step(comb, h, 1, Fraction(1, 2), before, after)
        assert [(t.weight, t.solution.edges()) for t in comb.terms] == [
            (Fraction(1, 2), [0, 1]), (Fraction(1, 2), [0]), (Fraction(1), [])]
        assert check_step_conditions(comb, h, after) == []

    def test_mass_outside_unit_interval(self, triangle):
        h = triangle.hypergraph
        ctx = PackingContext.from_solution(h, FractionalSolution.zeros(3))
        with pytest.raises(ValidationError):
            modified_packing_step(trivial_combination(2, 3), h, 0, Fraction(3, 2), ctx, ctx)

    def test_context_agrees_with_recomputation(self, triangle):
        x = FractionalSolution((Fraction(1, 2), Fraction(1, 2), 0))
        ctx = PackingContext.from_solution(triangle.hypergraph, x)
        assert ctx.ceilings == (1, 1, 1)
        assert ctx.is_integral(1)
        assert not ctx.is_integral(0)
        assert ctx.agrees_with(triangle.hypergraph)


class TestHbM:
    def test_fano_core(self, fano):
        x = FractionalSolution((Fraction(1, 3),) * 7)
        comb = hbm_core(fano.hypergraph, range(7), x)
        assert comb.alpha == Fraction(7, 3)
        assert recomposition_ok(comb, x.values)
        assert len(comb) <= 1 + 4 * 7
        assert all(is_feasible(fano, t.solution) for t in comb.terms)

    def test_core_rejects_integral_support(self, triangle):
        x = FractionalSolution((Fraction(1), 0, 0))
        with pytest.raises(ValidationError):
            hbm_core(triangle.hypergraph, [0], x)

    def test_core_rejects_dependent_columns(self):
        h = Hypergraph.from_edges(2, [(0, 1), (0, 1)])
        x = FractionalSolution((Fraction(1, 2), Fraction(1, 2)))
        with pytest.raises(ValidationError):
            hbm_core(h, [0, 1], x)

    def test_decompose_fano_is_tight(self, fano):
        decomposition = decompose(fano)
        assert_sound(fano, decomposition)
        lp_result, comb = decomposition
        assert lp_result.value == Fraction(7, 3)
        assert comb.alpha == Fraction(7, 3)
        assert best_term(comb, fano.w)[1] == 1

    def test_decompose_pg3_is_tight(self):
        from hypermatch.oracle import gen_projective_plane
        instance = gen_projective_plane(3)
        decomposition = decompose(instance)
        assert_sound(instance, decomposition)
        assert decomposition.lp_result.value == Fraction(13, 4)
        assert best_term(decomposition.combination, instance.w)[1] == 1

    def test_decompose_truncated_plane_bipartite(self, truncated):
        decomposition = decompose(truncated)
        assert_sound(truncated, decomposition)
        assert decomposition.lp_result.value == 2
        assert decomposition.combination.alpha == 2
        assert best_term(decomposition.combination, truncated.w)[1] == 1

    def test_integral_vertex(self, single_edge):
        lp_result, comb = decompose(single_edge)
        assert lp_result.value == 5
        assert [(t.weight, t.solution.multiplicities) for t in comb.terms] == [
            (Fraction(1), (1,)), (Fraction(1, 2), (0,))]

    def test_triangle_general_ratio(self, triangle):
        lp_result, comb = decompose(triangle)
        assert comb.alpha == Fraction(3, 2)
        assert lp_result.value == Fraction(3, 2)
        assert best_term(comb, triangle.w)[1] == 1

    def test_edgeless_instance(self):
        instance = validate(BMatchInstance(Hypergraph.from_edges(2, []), (1, 1), (), ()))
        lp_result, comb = decompose(instance)
        assert lp_result.value == 0
        assert comb.alpha == 1
        assert len(comb) == 1

    def test_prune_keeps_value(self, fano):
        lp_result, comb = decompose(fano)
        pruned = caratheodory_prune(comb)
        assert pruned.alpha == comb.alpha
        assert len(pruned) <= fano.hypergraph.num_edges + 1
        assert recomposition_ok(pruned, lp_result.solution.values)
        assert decompose(fano, prune=True).combination.check() == []

    @pytest.mark.parametrize("seed", range(60))
    def test_random_general(self, seed):
        rng = np.random.default_rng(seed)
        instance = random_bmatch(rng, int(rng.choice((2, 3, 4))), 8, 10)
        assert_sound(instance, decompose(instance))

    @pytest.mark.parametrize("seed", range(60))
    def test_random_bipartite(self, seed):
        rng = np.random.default_rng(1000 + seed)
        instance = random_bmatch(rng, int(rng.choice((2, 3, 4))), 8, 10, bipartite=True)
        decomposition = decompose(instance)
        assert_sound(instance, decomposition)
        assert decomposition.combination.alpha == max(instance.hypergraph.k, 2) - 1

    @pytest.mark.parametrize("seed", range(10))
    def test_random_pruned(self, seed):
        instance = random_bmatch(np.random.default_rng(500 + seed), 3, 8, 10)
        decomposition = decompose(instance, prune=True)
        assert_sound(instance, decomposition)
        assert len(decomposition.combination) <= instance.hypergraph.num_edges + 1
