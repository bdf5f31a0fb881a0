"""Forest polynomials and counts along every independent route."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import multigraphs, simple_graphs
from forestbound import (
    Multigraph,
    ResourceLimitError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    forest_count,
    forest_polynomial,
    forest_polynomial_oracle,
    glued_cycles,
    petersen,
    pseudo_forest_polynomial,
    r_at_two_exact,
    r_polynomial,
    r_polynomial_regular,
    spanning_tree_count,
)
from forestbound.forests import _forest_count_partition_dp, _forest_count_reduction


class TestForestPolynomial:
    def test_triangle(self):
        fp = forest_polynomial(complete_graph(3))
        assert fp.poly.coeffs == (0, 3, 3, 1)
        assert fp.total() == 7
        assert fp.forest_numbers() == [1, 3, 3]

    def test_tree_counts_every_subset(self):
        path = Multigraph(4, [(0, 1), (1, 2), (2, 3)])
        fp = forest_polynomial(path)
        # z (z+1)^3
        assert fp.poly.coeffs == (0, 1, 3, 3, 1)
        assert fp.total() == 8

    def test_k4(self):
        fp = forest_polynomial(complete_graph(4))
        assert fp.forest_numbers() == [1, 6, 15, 16]
        assert fp.total() == 38

    def test_loops_ignored(self):
        g = Multigraph(3, [(0, 0), (0, 1), (1, 2)])
        fp = forest_polynomial(g)
        assert fp.total() == 4

    def test_budget_guard(self):
        with pytest.raises(ResourceLimitError):
            forest_polynomial(complete_graph(5), node_budget=5)


class TestOracle:
    def test_single_edge(self):
        assert forest_polynomial_oracle(complete_graph(2)).poly.coeffs == (0, 1, 1)

    def test_parallel_pair_semantics(self):
        g = Multigraph(2, [(0, 1), (0, 1)])
        # both edges jointly form a 2-cycle, so z^2 + 2z
        assert forest_polynomial_oracle(g).poly.coeffs == (0, 2, 1)

    def test_edge_cap(self):
        g = Multigraph(32, [(i, i + 1) for i in range(31)])
        with pytest.raises(ResourceLimitError):
            forest_polynomial_oracle(g)

    @given(multigraphs(max_vertices=6, max_edges=10))
    @settings(max_examples=60, deadline=None)
    def test_deletion_contraction_matches_oracle(self, g):
        assert forest_polynomial(g).poly == forest_polynomial_oracle(g).poly


class TestForestCount:
    def test_cycle(self):
        assert forest_count(cycle_graph(4)) == 15

    def test_glued_cycles_block_product(self):
        assert forest_count(glued_cycles(3, 5)) == 7**5

    def test_disjoint_union_multiplies(self):
        two = disjoint_union(cycle_graph(3), cycle_graph(3))
        assert forest_count(two) == 49

    def test_petersen(self):
        assert forest_count(petersen()) == 22292

    def test_empty_graph(self):
        assert forest_count(Multigraph(0, [])) == 1
        assert forest_count(Multigraph(3, [])) == 1

    @given(multigraphs(max_vertices=7, max_edges=11))
    @settings(max_examples=50, deadline=None)
    def test_count_equals_polynomial_total(self, g):
        assert forest_count(g) == forest_polynomial(g).total()

    @given(multigraphs(min_vertices=2, max_vertices=7, max_edges=11, allow_loops=False))
    @settings(max_examples=40, deadline=None)
    def test_internal_routes_agree(self, g):
        # partition DP and weighted reduction must agree on any input
        assert _forest_count_partition_dp(g) == _forest_count_reduction(g)

    def test_reduction_route_on_large_sparse_graph(self):
        c16 = cycle_graph(16)
        assert forest_count(c16) == 2**16 - 1

    def test_reduction_budget(self):
        with pytest.raises(ResourceLimitError):
            _forest_count_reduction(petersen(), node_budget=3)


class TestPseudoForests:
    def test_triangle_weights(self):
        assert pseudo_forest_polynomial(complete_graph(3)).coeffs == (2, 3, 3, 1)

    def test_single_edge(self):
        assert pseudo_forest_polynomial(complete_graph(2)).coeffs == (0, 1, 1)

    def test_edgeless(self):
        assert pseudo_forest_polynomial(Multigraph(3, [])).coeffs == (0, 0, 0, 1)

    def test_parallel_pair_counts_two_cycle(self):
        g = Multigraph(2, [(0, 1), (0, 1)])
        # subsets: empty (z^2), two singles (2z), the 2-cycle with weight 2
        assert pseudo_forest_polynomial(g).coeffs == (2, 2, 1)

    def test_loop_is_unicyclic(self):
        g = Multigraph(1, [(0, 0)])
        # empty subset (z) and the loop itself (weight 2)
        assert pseudo_forest_polynomial(g).coeffs == (2, 1)


class TestRPolynomial:
    def test_triangle(self):
        assert r_polynomial(complete_graph(3)).coeffs == (1, 0, 0, 1)

    def test_single_edge(self):
        assert r_polynomial(complete_graph(2)).coeffs == (0, -1, 1)

    def test_edgeless_product_form(self):
        g = Multigraph(3, [])
        # only the empty matching, every degree 0: (z-1)^3
        assert r_polynomial(g).coeffs == (-1, 3, -3, 1)

    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            r_polynomial(Multigraph(1, [(0, 0)]))

    def test_regular_form_agreement(self):
        for g, d in [(complete_graph(3), 2), (cycle_graph(4), 2), (complete_graph(4), 3)]:
            assert r_polynomial_regular(g, d) == r_polynomial(g)

    def test_regular_form_validates_degree(self):
        with pytest.raises(ValueError):
            r_polynomial_regular(glued_cycles(3, 2), 2)

    @given(simple_graphs(max_vertices=7, max_edges=12))
    @settings(max_examples=60, deadline=None)
    def test_shift_identity_on_random_graphs(self, g):
        assert r_polynomial(g).shift(1) == pseudo_forest_polynomial(g)

    def test_shift_identity_on_parallel_edges(self):
        g = Multigraph(2, [(0, 1), (0, 1)])
        assert r_polynomial(g).shift(1) == pseudo_forest_polynomial(g)

    @given(simple_graphs(max_vertices=6, max_edges=9))
    @settings(max_examples=40, deadline=None)
    def test_forest_polynomial_bounded_pointwise(self, g):
        fp = forest_polynomial(g)
        shifted = r_polynomial(g).shift(1)
        for x in (Fraction(1), Fraction(3), Fraction(1, 3)):
            assert fp.eval_at(x) <= shifted.eval_at(x)


class TestRAtTwo:
    def test_triangle(self):
        assert r_at_two_exact(complete_graph(3), 2) == 9

    def test_k5(self):
        assert r_at_two_exact(complete_graph(5), 4) == 925

    def test_k6(self):
        assert r_at_two_exact(complete_graph(6), 5) == 14136

    def test_equals_polynomial_evaluation(self):
        for g, d in [(cycle_graph(5), 2), (complete_graph(4), 3), (petersen(), 3)]:
            assert r_at_two_exact(g, d) == r_polynomial(g).eval_at(2)

    def test_bounds_forest_count(self):
        for g, d in [(cycle_graph(6), 2), (complete_graph(4), 3), (petersen(), 3)]:
            assert forest_count(g) <= r_at_two_exact(g, d)

    def test_validates_regularity(self):
        with pytest.raises(ValueError):
            r_at_two_exact(glued_cycles(3, 2), 2)


class TestSpanningTrees:
    def test_cayley_k4(self):
        assert spanning_tree_count(complete_graph(4)) == 16

    def test_cycle(self):
        assert spanning_tree_count(cycle_graph(5)) == 5

    def test_disconnected_zero(self):
        assert spanning_tree_count(disjoint_union(cycle_graph(3), cycle_graph(3))) == 0

    def test_parallel_multiplicity(self):
        assert spanning_tree_count(Multigraph(2, [(0, 1), (0, 1)])) == 2

    def test_petersen(self):
        assert spanning_tree_count(petersen()) == 2000

    @given(multigraphs(max_vertices=6, max_edges=10))
    @settings(max_examples=50, deadline=None)
    def test_matches_top_forest_coefficient(self, g):
        if not g.is_connected():
            assert spanning_tree_count(g) == 0
        else:
            fp = forest_polynomial(g)
            assert spanning_tree_count(g) == fp.poly.coefficient(1)
