"""
Unit tests for graphs, instances and target-clique enumeration.
"""
import itertools

import networkx as nx
import pytest

from Src.CliqueDeletion.bruteforce import count_k_cliques_bruteforce
from Src.CliqueDeletion.graph import CfvdInstance, Graph, enumerate_target_cliques
from Src.Shared.errors import GuardExceededError, InvalidInstanceError


class TestGraph:
    """Test graph construction and helpers."""

    def test_self_loop_rejected(self):
        """Test that self-loops are invalid."""
        with pytest.raises(InvalidInstanceError, match="self-loop"):
            Graph.build(2, [(1, 1)])

    def test_vertex_out_of_range(self):
        """Test that edges must stay within 1..n."""
        with pytest.raises(InvalidInstanceError):
            Graph.build(2, [(1, 3)])

    def test_nonpositive_weight(self):
        """Test that weights must be >= 1."""
        with pytest.raises(InvalidInstanceError, match="weight"):
            Graph.build(2, [], [1, 0])

    def test_edges_normalized(self):
        """Test that (v, u) and (u, v) are one edge."""
        graph = Graph.build(3, [(2, 1), (1, 2), (3, 2)])
        assert graph.edges == frozenset({(1, 2), (2, 3)})
        assert graph.neighbors(2) == frozenset({1, 3})

    def test_is_clique(self, k4, triangle_plus_edge):
        """Test clique recognition."""
        assert k4.is_clique([1, 2, 3, 4])
        assert triangle_plus_edge.is_clique([1, 2, 3])
        assert not triangle_plus_edge.is_clique([3, 4])
        assert triangle_plus_edge.is_clique([])

    def test_induced_subgraph_renumbers(self, triangle_plus_edge):
        """Test renumbering and the new-to-old map."""
        sub, mapping = triangle_plus_edge.induced_subgraph([5, 2, 3])
        assert mapping == (2, 3, 5)
        assert sub.edges == frozenset({(1, 2)})

    def test_networkx_roundtrip(self, petersen):
        """Test conversion through networkx."""
        assert petersen.vertex_count == 10
        assert petersen.edge_count == 15
        assert Graph.from_networkx(petersen.to_networkx()) == petersen

    def test_unweighted_instance_needs_unit_weights(self):
        """Test that weights are rejected on unweighted instances."""
        with pytest.raises(InvalidInstanceError):
            CfvdInstance(Graph.build(1, [], [2]), 0, 1)
        assert CfvdInstance(Graph.build(1, [], [2]), 0, 1, weighted=True).weighted

    def test_with_unit_weights(self):
        """Test that dropping weights keeps the edges."""
        graph = Graph.build(3, [(1, 2)], [4, 1, 2])
        unit = graph.with_unit_weights()
        assert unit.weights == (1, 1, 1)
        assert unit.edges == graph.edges
        assert CfvdInstance(unit, 0, 1).graph.is_unit_weighted()

    def test_parameter_ranges(self, k4):
        """Test h >= 0 and k >= 1."""
        with pytest.raises(InvalidInstanceError):
            CfvdInstance(k4, -1, 3)
        with pytest.raises(InvalidInstanceError):
            CfvdInstance(k4, 1, 0)


class TestCliqueCounting:
    """Test target-clique enumeration and counting."""

    def test_k4(self, k4):
        """Test C(4,3) triangles and no 5-cliques."""
        assert count_k_cliques_bruteforce(k4, 3) == 4
        assert count_k_cliques_bruteforce(k4, 5) == 0

    def test_weighted_exact(self):
        """Test that weighted targets have total weight exactly k."""
        graph = Graph.build(3, [(1, 2), (2, 3), (1, 3)], [1, 2, 3])
        assert sorted(sorted(c) for c in enumerate_target_cliques(graph, 3, weighted=True)) == [[1, 2], [3]]
        assert len(enumerate_target_cliques(graph, 3, weighted=True, at_least=True)) == 5

    def test_random_graph_matches_reverse_enumeration(self):
        """Test the count against a second pass over reversed vertex order."""
        graph = Graph.from_networkx(nx.gnp_random_graph(8, 0.5, seed=3))
        reverse = [
            subset for subset in itertools.combinations(reversed(list(graph.vertices())), 3)
            if graph.is_clique(subset)
        ]
        assert count_k_cliques_bruteforce(graph, 3) == len(reverse)

    def test_guard(self, petersen):
        """Test the vertex-count guard."""
        with pytest.raises(GuardExceededError):
            count_k_cliques_bruteforce(petersen, 3, guard=9)
