"""
Unit tests for random DVCR generation.
"""
import random

import pytest

from Src.CliqueDeletion.graph import Graph
from Src.Discovery.generators import gen_random_dvcr, hide_graph, random_minimal_cover
from Src.Discovery.incidence import discover_graph
from Src.Discovery.reconfiguration import validate_endpoints
from Src.Discovery.vertex_cover import is_minimal_vertex_cover


class TestRandomMinimalCover:
    """Test greedy minimal covers."""

    @pytest.mark.parametrize("seed", range(5))
    def test_minimal(self, seed, cycle4):
        """Test that the result is a minimal cover."""
        assert is_minimal_vertex_cover(cycle4, random_minimal_cover(cycle4, random.Random(seed)))

    def test_edgeless(self):
        """Test that the empty set covers an edgeless graph."""
        assert random_minimal_cover(Graph.build(3), random.Random(0)) == frozenset()


class TestGenRandomDvcr:
    """Test instance generation."""

    def test_deterministic(self):
        """Test that a seed fixes the instance."""
        assert gen_random_dvcr(6, 3, seed=11) == gen_random_dvcr(6, 3, seed=11)

    @pytest.mark.parametrize("seed", range(4))
    def test_endpoints_valid_after_discovery(self, seed, backend, ledger):
        """Test that S and T are minimal covers of the hidden graph."""
        inst = gen_random_dvcr(6, 3, seed=seed, edge_probability=0.4)
        graph = discover_graph(inst.incidence, backend, ledger)
        validate_endpoints(graph, inst)
        assert 1 <= inst.length <= 12


class TestHideGraph:
    """Test hiding a graph behind per-pair CNFs."""

    @pytest.mark.parametrize("seed", range(3))
    def test_discovers_back(self, seed, petersen_graph, backend, ledger):
        """Test that discovery recovers the hidden graph exactly."""
        spec = hide_graph(petersen_graph, seed=seed, max_cnf_vars=4)
        assert discover_graph(spec, backend, ledger) == petersen_graph
        assert ledger.query_count("discover") == 45
