"""
Ledger-recording oracle queries.

Every call is exactly one NP-oracle query. A query that fails raises and is
not recorded.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from Src.Formula.formula import Assignment, CnfFormula, DnfFormula, evaluate, negate_dnf_to_cnf
from Src.Shared.errors import OracleIntegrityError

from .backends import OracleBackend
from .ledger import OracleLedger

logger = logging.getLogger("workbench.oracle.queries")


@dataclass(frozen=True)
class OracleVerdict:
    """Answer of one SAT query; a model is present only for satisfiable inputs."""
    satisfiable: bool
    model: Optional[Assignment] = None

    def __post_init__(self):
        if self.model is not None and not self.satisfiable:
            raise ValueError("unsatisfiable verdict cannot carry a model")


def query_sat(backend: OracleBackend, ledger: OracleLedger, cnf: CnfFormula, phase: str) -> OracleVerdict:
    """
    Decide satisfiability of `cnf` with one oracle query.

    Args:
        backend: SAT backend to ask
        ledger: Session ledger the query is recorded in
        cnf: Query formula
        phase: Algorithm phase tag for the ledger

    Returns:
        OracleVerdict; when satisfiable it carries a validated total model
        if the backend printed one, and no model otherwise. Callers that
        need a witness check for it.

    Raises:
        OracleFailureError: the backend failed; nothing is recorded
        OracleIntegrityError: the backend returned a model that does not
            satisfy `cnf`
    """
    satisfiable, model = backend.decide(cnf)

    assignment = None
    if satisfiable and model is not None:
        assignment = Assignment.of(model, declared=range(1, cnf.variable_count + 1))
        if not evaluate(cnf, assignment):
            logger.error(f"Backend {backend.name} returned a model that falsifies the query in phase {phase}")
            raise OracleIntegrityError("returned model does not satisfy the query")

    ledger.record(phase, cnf.variable_count, len(cnf.clauses), satisfiable)
    return OracleVerdict(satisfiable, assignment)


def query_dnf_tautology(backend: OracleBackend, ledger: OracleLedger, dnf: DnfFormula, phase: str) -> bool:
    """
    Decide whether `dnf` is a tautology with one oracle query.

    Asks for satisfiability of the CNF negation; the ledger entry records
    the sizes of that negation.
    """
    return not query_sat(backend, ledger, negate_dnf_to_cnf(dnf), phase).satisfiable
