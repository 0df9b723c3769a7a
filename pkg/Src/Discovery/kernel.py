"""
Polynomial P^NP-kernel for Discovery Vertex Cover Reconfiguration,
parameterized by k.

After discovery, the graph is replaced by its vertex cover full kernel and
re-encoded with trivial CNFs. Every cover of size <= k contains the forced
set H, so H lies in S and T; vertices dropped from G - H are isolated there
and never shorten a walk; the pendants keep H forced in the kernel graph.
"""
import logging

from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger

from .incidence import IncidenceSpec, discover_graph, make_trivial_cnf
from .reconfiguration import DvcrInstance, trivial_no_dvcr, validate_endpoints
from .vertex_cover import vc_full_kernel

logger = logging.getLogger("workbench.discovery.kernel")


def kernelize_dvcr(inst: DvcrInstance, backend: OracleBackend, ledger: OracleLedger) -> DvcrInstance:
    """
    Kernelize a DVCR instance.

    Issues C(n, 2) discovery queries. The output has at most 3k^2 + 2k
    vertices and sequence length min(l, 2^n').

    Raises:
        MalformedInstanceError: S or T is not a minimal cover of the discovered graph
    """
    graph = discover_graph(inst.incidence, backend, ledger)
    validate_endpoints(graph, inst)

    if len(inst.source) > inst.k or len(inst.target) > inst.k:
        logger.info(f"|S|={len(inst.source)}, |T|={len(inst.target)} exceed k={inst.k}: trivial no")
        return trivial_no_dvcr()

    kernel = vc_full_kernel(graph, inst.k)
    if kernel is None:
        logger.info(f"No vertex cover of size <= {inst.k}: trivial no")
        return trivial_no_dvcr()

    relabel = kernel.original_to_kernel()
    spec = IncidenceSpec.for_graph(
        kernel.graph.vertex_count,
        {edge: make_trivial_cnf(True) for edge in kernel.graph.edges},
    )
    length = min(inst.length, 2 ** kernel.graph.vertex_count)
    logger.info(
        f"DVCR kernel: {inst.vertex_count} -> {kernel.graph.vertex_count} vertices, length {length}"
    )
    return DvcrInstance(
        spec,
        frozenset(relabel[v] for v in inst.source),
        frozenset(relabel[v] for v in inst.target),
        inst.k,
        length,
    )
