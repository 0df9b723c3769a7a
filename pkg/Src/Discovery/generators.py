"""
Seeded random discovery instances.

Edges hide behind planted-satisfiable CNFs and non-edges behind random
clauses with an unsatisfiable core, so discovery has real work to do.
"""
import itertools
import random
from typing import Dict, FrozenSet, List, Tuple

from Src.CliqueDeletion.graph import Graph
from Src.Formula.formula import CnfFormula
from Src.Formula.generators import Seed, gen_planted_cnf, gen_unsatisfiable_cnf, make_rng

from .incidence import IncidenceSpec
from .reconfiguration import DvcrInstance
from .vertex_cover import is_vertex_cover


def hide_graph(graph: Graph, seed: Seed = None, max_cnf_vars: int = 6) -> IncidenceSpec:
    """Graph-edges spec whose discovered graph is `graph`."""
    rng = make_rng(seed)
    instances: Dict[Tuple[int, int], CnfFormula] = {}
    for pair in itertools.combinations(graph.vertices(), 2):
        num_vars = rng.randint(1, max_cnf_vars)
        num_clauses = rng.randint(1, 2 * num_vars)
        if pair in graph.edges:
            instances[pair] = gen_planted_cnf(num_vars, num_clauses, 3, rng)
        else:
            instances[pair] = gen_unsatisfiable_cnf(num_vars, num_clauses, 3, rng)
    return IncidenceSpec.for_graph(graph.vertex_count, instances)


def random_minimal_cover(graph: Graph, rng: random.Random) -> FrozenSet[int]:
    """Drop vertices from V in random order while the rest stays a cover."""
    cover = set(graph.vertices())
    order: List[int] = list(graph.vertices())
    rng.shuffle(order)
    for v in order:
        cover.discard(v)
        if not is_vertex_cover(graph, cover):
            cover.add(v)
    return frozenset(cover)


def gen_random_dvcr(
    n: int,
    k: int,
    seed: Seed = 0,
    edge_probability: float = 0.25,
    max_cnf_vars: int = 6,
) -> DvcrInstance:
    rng = make_rng(seed)
    edges = [pair for pair in itertools.combinations(range(1, n + 1), 2) if rng.random() < edge_probability]
    graph = Graph.build(n, edges)
    spec = hide_graph(graph, rng, max_cnf_vars)
    source = random_minimal_cover(graph, rng)
    target = random_minimal_cover(graph, rng)
    length = rng.randint(1, 2 * n) if n else 1
    return DvcrInstance(spec, source, target, k, length)
