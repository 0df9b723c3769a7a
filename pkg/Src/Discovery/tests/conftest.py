"""
Shared pytest fixtures for discovery tests.
"""
import networkx as nx
import pytest

from Src.CliqueDeletion.graph import Graph
from Src.Formula.formula import CnfFormula


@pytest.fixture
def unsat_phi() -> CnfFormula:
    return CnfFormula.from_ints([[1], [-1]], 1)


@pytest.fixture
def sat_phi() -> CnfFormula:
    return CnfFormula.from_ints([[1]], 1)


@pytest.fixture
def path4() -> Graph:
    """Path a-b-c-d on 1..4."""
    return Graph.build(4, [(1, 2), (2, 3), (3, 4)])


@pytest.fixture
def cycle4() -> Graph:
    """Cycle a-b-c-d-a on 1..4."""
    return Graph.build(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def star5() -> Graph:
    """K_{1,5} with center 1."""
    return Graph.build(6, [(1, v) for v in range(2, 7)])


@pytest.fixture
def petersen_graph() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())
