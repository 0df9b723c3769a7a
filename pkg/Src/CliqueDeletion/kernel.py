"""
Vertex-pruning P^NP-kernel: drop every vertex that lies in no target clique.
"""
import logging

from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger

from .clique_finder import find_clique_via_oracle
from .graph import CfvdInstance

logger = logging.getLogger("workbench.cliquedel.kernel")

PHASE = "kernel-cfvd"


def kernelize_cfvd(inst: CfvdInstance, backend: OracleBackend, ledger: OracleLedger) -> CfvdInstance:
    """
    Keep exactly the vertices contained in some clique of size (weight) k.

    One membership query per original vertex, phase "kernel-cfvd". The
    survivors are renumbered in ascending order; h and k are unchanged.
    """
    graph = inst.graph
    survivors = [
        v for v in graph.vertices()
        if find_clique_via_oracle(graph, inst.k, backend, ledger, forced=v, weighted=inst.weighted, phase=PHASE)
        is not None
    ]
    kernel_graph, _ = graph.induced_subgraph(survivors)
    logger.info(f"Kernel keeps {len(survivors)} of {graph.vertex_count} vertices")
    return CfvdInstance(kernel_graph, inst.h, inst.k, inst.weighted)
