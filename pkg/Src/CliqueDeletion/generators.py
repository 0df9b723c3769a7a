"""
Seeded random Clique-Free Vertex Deletion instances.
"""
import networkx as nx

from Src.Formula.generators import make_rng

from .graph import CfvdInstance, Graph


def gen_random_cfvd(
    n: int,
    p: float,
    h: int,
    k: int,
    seed: int = 0,
    weighted: bool = False,
    max_weight: int = 3,
) -> CfvdInstance:
    """
    G(n, p) instance; weighted instances draw weights from 1..max_weight.
    """
    graph = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))
    if weighted:
        rng = make_rng(seed)
        graph = Graph(graph.vertex_count, graph.edges, tuple(rng.randint(1, max_weight) for _ in graph.vertices()))
    return CfvdInstance(graph, h, k, weighted)
