"""Witness search for relating edges and generating subgraphs."""

import pytest
from hypothesis import given, settings

from support import all_bipartitions
from test_graphs import graphs
from wellcovered.graphs import Graph
from wellcovered.independent_sets import Budget, BudgetExceededError
from wellcovered.named import complete_graph, cycle_graph, path_graph, star_graph
from wellcovered.witness import (
    Bipartition,
    boundary_sets,
    check_bipartition,
    check_witness,
    is_generating,
    is_generating_oracle,
    is_relating,
)


def bp(xs, ys) -> Bipartition:
    return Bipartition(frozenset(xs), frozenset(ys))


class TestBipartition:
    def test_orientation_prefers_smaller_side(self):
        assert bp({3, 4}, {1, 2}).bx == frozenset({1, 2})
        assert bp({2, 3}, {1}).bx == frozenset({1})
        assert bp({5}, {2}).bx == frozenset({2})

    def test_rejects_empty_or_overlapping_sides(self):
        with pytest.raises(ValueError):
            bp((), {1})
        with pytest.raises(ValueError):
            bp({1, 2}, {2, 3})

    def test_vertices(self):
        assert bp({1}, {2, 3}).vertices == frozenset({1, 2, 3})

    def test_check_against_graph(self):
        check_bipartition(cycle_graph(4), bp({1, 3}, {2, 4}))
        with pytest.raises(ValueError):
            check_bipartition(cycle_graph(4), bp({1}, {3}))


class TestBoundarySets:
    def test_seven_cycle_edge(self):
        b = boundary_sets(cycle_graph(7), bp({1}, {2}))
        assert b.m_x == frozenset({7})
        assert b.m_y == frozenset({3})
        assert b.candidates == frozenset({4, 6})

    def test_five_cycle_edge(self):
        b = boundary_sets(cycle_graph(5), bp({1}, {2}))
        assert b.m_x == frozenset({5})
        assert b.m_y == frozenset({3})
        assert b.candidates == frozenset({4})

    def test_single_edge_graph(self):
        b = boundary_sets(complete_graph(2), bp({1}, {2}))
        assert b.m_x == b.m_y == b.candidates == frozenset()

    def test_path_edge(self):
        b = boundary_sets(path_graph(4), bp({1}, {2}))
        assert b.m_x == frozenset()
        assert b.m_y == frozenset({3})
        assert b.candidates == frozenset({4})


class TestCheckWitness:
    def test_valid_witness(self):
        assert check_witness(cycle_graph(5), bp({1}, {2}), {4})

    def test_rejects_vertex_too_close(self):
        assert not check_witness(cycle_graph(5), bp({1}, {2}), {3})

    def test_rejects_non_maximal_union(self):
        assert not check_witness(cycle_graph(5), bp({1}, {2}), ())

    def test_rejects_dependent_set(self):
        assert not check_witness(cycle_graph(7), bp({1}, {2}), {4, 5})

    def test_empty_witness_can_be_valid(self):
        assert check_witness(cycle_graph(4), bp({1, 3}, {2, 4}), ())


class TestRelating:
    def test_five_cycle(self):
        assert is_relating(cycle_graph(5), 1, 2) == frozenset({4})

    def test_four_cycle_is_negative(self):
        assert is_relating(cycle_graph(4), 1, 2) is None

    def test_path_endpoints(self):
        assert is_relating(path_graph(4), 1, 2) == frozenset({4})
        assert is_relating(path_graph(4), 2, 3) is None

    def test_single_edge_has_empty_witness(self):
        out = is_relating(complete_graph(2), 1, 2)
        assert out == frozenset()
        assert out is not None

    def test_requires_an_edge(self):
        with pytest.raises(ValueError):
            is_relating(cycle_graph(5), 1, 3)


class TestGenerating:
    def test_whole_four_cycle(self):
        assert is_generating(cycle_graph(4), bp({1, 3}, {2, 4})) == frozenset()

    def test_seven_cycle_edge(self):
        assert is_generating(cycle_graph(7), bp({1}, {2})) == frozenset({4, 6})

    def test_star_center_versus_leaves(self):
        g = star_graph(3)
        assert is_generating(g, bp({1}, {2, 3, 4})) == frozenset()

    def test_returned_witness_passes_recheck(self):
        g = cycle_graph(7)
        w = is_generating(g, bp({1}, {2}))
        assert w is not None and check_witness(g, bp({1}, {2}), w)

    def test_rejects_non_bipartition(self):
        with pytest.raises(ValueError):
            is_generating(cycle_graph(4), bp({1}, {3}))

    def test_budget_on_candidate_subsets(self):
        with pytest.raises(BudgetExceededError):
            is_generating(cycle_graph(7), bp({1}, {2}), Budget(max_subsets=3))
        assert is_generating(cycle_graph(7), bp({1}, {2}), Budget(max_subsets=4)) is not None


class TestSearchAgreesWithOracle:
    @pytest.mark.parametrize(
        "g",
        [complete_graph(2), path_graph(3), path_graph(4),
         cycle_graph(4), cycle_graph(5), cycle_graph(7), star_graph(4),
         Graph(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 5)))],
    )
    def test_fixtures(self, g):
        for b in all_bipartitions(g):
            fast = is_generating(g, b)
            slow = is_generating_oracle(g, b)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert check_witness(g, b, fast)
                assert check_witness(g, b, slow)

    @given(graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_random_graphs(self, g):
        for b in all_bipartitions(g):
            fast = is_generating(g, b)
            slow = is_generating_oracle(g, b)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert check_witness(g, b, fast)
