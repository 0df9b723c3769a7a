"""
FPT^NP[few] decision of exists-forall DNF, parameterized by |X|.
"""
import logging

from Src.Formula.formula import QDnfInstance, iter_assignments, restrict_dnf
from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger
from Src.Oracle.queries import query_dnf_tautology

logger = logging.getLogger("workbench.qsat.solver")

PHASE = "fptnp-few"


def decide_qdnf_fptnp(inst: QDnfInstance, backend: OracleBackend, ledger: OracleLedger) -> bool:
    """
    Enumerate X-assignments and ask one tautology query for each restriction.

    Assignments are visited lexicographically by variable index, false
    before true, and the search stops at the first tautology. At most
    2^|X| queries are issued, all tagged "fptnp-few".
    """
    for x_assignment in iter_assignments(inst.existential):
        restricted = restrict_dnf(inst.formula, x_assignment)
        if query_dnf_tautology(backend, ledger, restricted, PHASE):
            logger.debug(f"Tautology under X-assignment {x_assignment.as_dict()}")
            return True
    return False
