"""Multigraph construction, generators, lifts, girth, minors."""

import math

import pytest
from hypothesis import given, settings

from conftest import multigraphs, simple_graphs
from forestbound import (
    GenerationError,
    Multigraph,
    SignAssignment,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    disjoint_union,
    girth,
    glued_cycles,
    petersen,
    random_regular,
    two_lift,
)


class TestMultigraph:
    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(ValueError):
            Multigraph(2, [(0, 2)])

    def test_edge_order_preserved(self):
        g = Multigraph(3, [(1, 2), (0, 1), (1, 2)])
        assert g.edges == ((1, 2), (0, 1), (1, 2))

    def test_loop_adds_two_to_degree(self):
        g = Multigraph(1, [(0, 0)])
        assert g.degree(0) == 2

    def test_degree_out_of_range(self):
        with pytest.raises(ValueError):
            complete_graph(3).degree(5)

    @given(multigraphs())
    @settings(max_examples=80)
    def test_degree_sum_is_twice_edges(self, g):
        assert sum(g.degrees()) == 2 * g.num_edges


class TestGenerators:
    def test_complete_graph_shape(self):
        assert complete_graph(3).num_edges == 3
        assert complete_graph(5).num_edges == 10
        assert complete_graph(1).num_edges == 0
        assert all(complete_graph(3).degree(v) == 2 for v in range(3))

    def test_complete_rejects_zero(self):
        with pytest.raises(ValueError):
            complete_graph(0)

    def test_cycle_graph(self):
        c6 = cycle_graph(6)
        assert c6.num_edges == 6 and c6.is_connected()
        assert girth(cycle_graph(4)) == 4
        with pytest.raises(ValueError):
            cycle_graph(2)

    def test_glued_cycles_shape(self):
        g = glued_cycles(3, 5)
        assert g.num_vertices == 11
        assert g.num_edges == 15
        assert g.degree(0) == 10
        assert sorted(set(g.degrees())) == [2, 10]

    def test_glued_single_cycle_is_cycle(self):
        g = glued_cycles(3, 1)
        assert g.num_vertices == 3 and g.num_edges == 3 and girth(g) == 3

    def test_glued_4_2(self):
        g = glued_cycles(4, 2)
        assert g.num_vertices == 7 and g.num_edges == 8

    def test_petersen(self):
        p = petersen()
        assert p.num_vertices == 10 and p.num_edges == 15
        assert all(p.degree(v) == 3 for v in range(10))
        assert p.is_connected()
        assert girth(p) == 5


class TestRandomRegular:
    def test_unique_cubic_on_four_vertices(self):
        g = random_regular(3, 4, seed=7)
        assert sorted(g.edges) == sorted(complete_graph(4).edges)

    def test_two_regular_five_vertices_is_pentagon(self):
        g = random_regular(2, 5, seed=3)
        assert g.is_connected() and g.num_edges == 5
        assert girth(g) == 5

    def test_deterministic_for_seed(self):
        a = random_regular(4, 10, seed=1)
        b = random_regular(4, 10, seed=1)
        assert a.edges == b.edges

    def test_output_simple_and_regular(self):
        for seed in range(5):
            g = random_regular(3, 8, seed=seed)
            assert g.is_simple()
            assert g.regular_degree() == 3

    def test_parity_validation(self):
        with pytest.raises(ValueError):
            random_regular(3, 5, seed=0)

    def test_density_validation(self):
        with pytest.raises(ValueError):
            random_regular(5, 5, seed=0)

    def test_generation_error_when_budget_tiny(self):
        with pytest.raises(GenerationError):
            random_regular(6, 8, seed=0, max_attempts=3)


class TestTwoLift:
    def test_all_plus_is_disjoint_double(self):
        g = petersen()
        lift = two_lift(g, SignAssignment.all_plus(g.num_edges))
        expected = disjoint_union(g, g)
        assert lift.num_vertices == expected.num_vertices
        assert sorted(lift.edges) == sorted(expected.edges)

    def test_all_minus_triangle_is_hexagon(self):
        lift = two_lift(cycle_graph(3), SignAssignment.all_minus(3))
        assert lift.num_vertices == 6
        assert lift.is_connected()
        assert girth(lift) == 6

    def test_single_minus_triangle_is_hexagon(self):
        lift = two_lift(cycle_graph(3), SignAssignment([1, 1, -1]))
        assert lift.is_connected() and girth(lift) == 6

    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            two_lift(Multigraph(1, [(0, 0)]), SignAssignment([1]))

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            two_lift(cycle_graph(3), SignAssignment([1, 1]))

    @given(simple_graphs(max_vertices=6, max_edges=9))
    @settings(max_examples=50)
    def test_degrees_preserved(self, g):
        import random

        signs = SignAssignment.random(g.num_edges, random.Random(5))
        lift = two_lift(g, signs)
        base = g.degrees()
        lifted = lift.degrees()
        n = g.num_vertices
        assert lifted[:n] == base and lifted[n:] == base

    @given(simple_graphs(max_vertices=6, max_edges=9))
    @settings(max_examples=50)
    def test_girth_never_decreases(self, g):
        import random

        signs = SignAssignment.random(g.num_edges, random.Random(11))
        assert girth(two_lift(g, signs)) >= girth(g)


class TestGirth:
    def test_tree_has_no_cycle(self):
        assert girth(Multigraph(4, [(0, 1), (1, 2), (1, 3)])) == math.inf

    def test_parallel_pair_is_two_cycle(self):
        assert girth(Multigraph(2, [(0, 1), (0, 1)])) == 2

    def test_loop_is_one_cycle(self):
        assert girth(Multigraph(1, [(0, 0)])) == 1

    def test_complete_graph_triangle(self):
        assert girth(complete_graph(5)) == 3


class TestMinors:
    def test_delete_edge_of_cycle_gives_path(self):
        g = delete_edge(cycle_graph(4), 0)
        assert g.num_edges == 3 and girth(g) == math.inf

    def test_contract_triangle_edge_gives_parallel_pair(self):
        g = contract_edge(complete_graph(3), 0)
        assert g.num_vertices == 2
        assert g.num_edges == 2
        assert g.has_parallel_edges()

    def test_contract_removes_new_loops(self):
        g = Multigraph(2, [(0, 1), (0, 1)])
        contracted = contract_edge(g, 0)
        assert contracted.num_vertices == 1 and contracted.num_edges == 0

    def test_contract_loop_rejected(self):
        with pytest.raises(ValueError):
            contract_edge(Multigraph(1, [(0, 0)]), 0)

    def test_index_validation(self):
        with pytest.raises(ValueError):
            delete_edge(cycle_graph(3), 3)


class TestSignAssignment:
    def test_validates_values(self):
        with pytest.raises(ValueError):
            SignAssignment([1, 0])

    def test_constructors(self):
        assert SignAssignment.all_plus(3).signs == (1, 1, 1)
        assert SignAssignment.all_minus(2).signs == (-1, -1)
