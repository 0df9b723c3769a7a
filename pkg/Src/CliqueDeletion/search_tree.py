"""
Bounded search tree for Clique-Free Vertex Deletion.

Find a target clique with the oracle; some vertex of it must be deleted, so
branch on each one (ascending order) with the budget reduced by its cost.
"""
import logging
from typing import FrozenSet

from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger

from .clique_finder import find_clique_via_oracle
from .graph import CfvdInstance

logger = logging.getLogger("workbench.cliquedel.search_tree")

PHASE = "cfvd-search"


def solve_cfvd_searchtree(inst: CfvdInstance, backend: OracleBackend, ledger: OracleLedger) -> bool:
    """
    Decide an instance with at most sum_{i<=h} k^i oracle queries.

    Depth is bounded by h; in weighted mode only vertices whose weight fits
    the remaining budget are branched on.
    """
    graph = inst.graph

    def branch(deleted: FrozenSet[int], budget: int) -> bool:
        remaining = [v for v in graph.vertices() if v not in deleted]
        subgraph, mapping = graph.induced_subgraph(remaining)
        clique = find_clique_via_oracle(subgraph, inst.k, backend, ledger, weighted=inst.weighted, phase=PHASE)
        if clique is None:
            logger.debug(f"No target clique after deleting {sorted(deleted)}")
            return True
        for vertex in sorted(mapping[v - 1] for v in clique):
            cost = inst.deletion_cost([vertex])
            if cost > budget:
                continue
            if branch(deleted | {vertex}, budget - cost):
                return True
        return False

    before = ledger.query_count(PHASE)
    answer = branch(frozenset(), inst.h)
    used = ledger.query_count(PHASE) - before
    logger.info(f"Search tree answered {'yes' if answer else 'no'} after {used} queries")
    return answer
