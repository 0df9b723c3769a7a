"""
SAT encoding of "is there a clique of size (weight) exactly k".

Vertex v is variable v. Non-adjacent pairs get a binary exclusion clause,
and the count of selected vertices is fixed by pysat's sequential counter.
In weighted mode a vertex of weight w is counted through w literals: its
selection variable and w - 1 copies tied to it by equivalence clauses.
"""
from typing import Dict, List, Optional, Sequence

from pysat.card import CardEnc, EncType
from pysat.formula import IDPool

from Src.Formula.formula import CnfFormula

from .graph import Graph


def exactly_k_sequential_counter(literals: Sequence[int], k: int, pool: IDPool) -> List[List[int]]:
    """
    Clauses forcing exactly k of `literals` true.

    Args:
        literals: Distinct signed variable indices, all already taken from `pool`
        k: Required count (>= 0)
        pool: Variable pool the counter registers are drawn from

    Returns:
        The clauses; `pool.top` is advanced past the registers
    """
    if k > len(literals):
        return [[]]
    if k == 0:
        return [[-lit] for lit in literals]
    encoded = CardEnc.equals(lits=list(literals), bound=k, vpool=pool, encoding=EncType.seqcounter)
    return [list(clause) for clause in encoded.clauses]


def encode_clique_query(graph: Graph, k: int, weighted: bool = False, forced: Optional[int] = None) -> CnfFormula:
    """
    CNF satisfiable iff `graph` has a clique of size (weight) exactly k
    containing `forced` when given. Variables 1..n select vertices.
    """
    pool = IDPool()
    selected: Dict[int, int] = {v: pool.id(("select", v)) for v in graph.vertices()}

    clauses: List[List[int]] = []
    n = graph.vertex_count
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if not graph.has_edge(u, v):
                clauses.append([-selected[u], -selected[v]])

    literals: List[int] = []
    for v in graph.vertices():
        literals.append(selected[v])
        if not weighted:
            continue
        for i in range(2, graph.weight(v) + 1):
            copy = pool.id(("copy", v, i))
            clauses.append([-selected[v], copy])
            clauses.append([selected[v], -copy])
            literals.append(copy)
    clauses.extend(exactly_k_sequential_counter(literals, k, pool))

    if forced is not None:
        clauses.append([selected[forced]])
    return CnfFormula.from_ints(clauses, pool.top)
