"""
Clique finding with one NP-oracle query.
"""
import logging
from typing import FrozenSet, Optional

from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger
from Src.Oracle.queries import query_sat
from Src.Shared.errors import OracleIntegrityError

from .encoding import encode_clique_query
from .graph import Graph

logger = logging.getLogger("workbench.cliquedel.clique_finder")


def find_clique_via_oracle(
    graph: Graph,
    k: int,
    backend: OracleBackend,
    ledger: OracleLedger,
    forced: Optional[int] = None,
    weighted: bool = False,
    phase: str = "find-clique",
) -> Optional[FrozenSet[int]]:
    """
    Find a clique of size exactly k (weighted: weight exactly k).

    Args:
        graph: The graph to search
        k: Target size or weight (>= 1)
        backend: SAT backend
        ledger: Session ledger (gains exactly one entry)
        forced: Vertex the clique must contain
        weighted: Measure cliques by total weight
        phase: Ledger phase tag

    Returns:
        The clique's vertex set, or None if there is none

    Raises:
        OracleIntegrityError: the decoded vertex set is not a valid clique,
            or the backend answered satisfiable without a model
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if forced is not None and forced not in graph.vertices():
        raise ValueError(f"forced vertex {forced} not in graph")

    verdict = query_sat(backend, ledger, encode_clique_query(graph, k, weighted, forced), phase)
    if not verdict.satisfiable:
        return None
    if verdict.model is None:
        raise OracleIntegrityError(f"backend {backend.name} found a {k}-clique but printed no model")

    model =verdict.model.as_dict()
    clique = frozenset(v for v in graph.vertices() if model[v])
    measure = graph.total_weight(clique) if weighted else len(clique)
    if measure != k or not graph.is_clique(clique) or (forced is not None and forced not in clique):
        raise OracleIntegrityError(f"decoded vertex set {sorted(clique)} is not a valid {k}-clique")
    logger.debug(f"Found clique {sorted(clique)} [{phase}]")
    return clique
