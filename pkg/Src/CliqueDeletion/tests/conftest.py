"""
Shared pytest fixtures for clique deletion tests.
"""
import networkx as nx
import pytest

from Src.CliqueDeletion.graph import CfvdInstance, Graph


@pytest.fixture
def k4() -> Graph:
    return Graph.complete(4)


@pytest.fixture
def petersen() -> Graph:
    """Triangle-free, 10 vertices."""
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def triangle_plus_edge() -> Graph:
    """Triangle 1-2-3 and a disjoint edge 4-5."""
    return Graph.build(5, [(1, 2), (2, 3), (1, 3), (4, 5)])


@pytest.fixture
def tiny_inputs():
    """Unweighted n=3, h=1, k=2 instances: triangle (no), path (yes), edge (yes), empty (yes)."""
    graphs = {
        "triangle": Graph.build(3, [(1, 2), (2, 3), (1, 3)]),
        "path": Graph.build(3, [(1, 2), (2, 3)]),
        "edge": Graph.build(3, [(1, 3)]),
        "empty": Graph.build(3),
    }
    return {name: CfvdInstance(graph, 1, 2) for name, graph in graphs.items()}
