"""
Existential-subformula decomposition and the polynomial P^NP-kernel.

The terms of a formula split into those connected (through shared
variables) to an existential variable, and the rest. The rest mentions
only universal variables and is disjoint from the first part, so the
instance is yes iff the rest is a tautology or the first part alone is a
yes-instance.
"""
import logging
from dataclasses import dataclass

from networkx.utils import UnionFind

from Src.Formula.formula import DnfFormula, QDnfInstance
from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger
from Src.Oracle.queries import query_dnf_tautology

logger = logging.getLogger("workbench.qsat.kernel")

PHASE = "kernel-qsat"


@dataclass(frozen=True)
class SubformulaSplit:
    """
    Attributes:
        phi1: The existential subformula as an instance (all of X, Y restricted to its variables)
        phi2: The remaining terms, over universal variables only
        phi1_size: Total literal count of phi1's terms
    """
    phi1: QDnfInstance
    phi2: DnfFormula
    phi1_size: int


def trivial_yes_instance() -> QDnfInstance:
    """X={x1}, Y=empty, formula x1."""
    return QDnfInstance(DnfFormula.from_ints([[1]], 1), {1}, set())


def trivial_no_instance() -> QDnfInstance:
    """X=Y=empty, formula constant false."""
    return QDnfInstance(DnfFormula.constant_false(0), set(), set())


def split_existential(inst: QDnfInstance) -> SubformulaSplit:
    """
    Split the terms by variable-connected components.

    A term belongs to phi1 iff its component contains an existential
    variable. Term order is preserved on both sides; empty terms go to phi2.
    Variable indices are kept.
    """
    components = UnionFind()
    for term in inst.formula.terms:
        if term:
            components.union(*(lit.variable for lit in term))

    occurring = inst.formula.variables()
    existential_roots = {components[var] for var in inst.existential if var in occurring}

    phi1_terms = []
    phi2_terms = []
    for term in inst.formula.terms:
        if term and components[term[0].variable] in existential_roots:
            phi1_terms.append(term)
        else:
            phi2_terms.append(term)

    phi1_formula = DnfFormula(tuple(phi1_terms), inst.variable_count)
    phi1 = QDnfInstance(
        phi1_formula,
        inst.existential,
        inst.universal & phi1_formula.variables(),
    )
    phi2 = DnfFormula(tuple(phi2_terms), inst.variable_count)
    return SubformulaSplit(phi1, phi2, phi1_formula.size())


def existential_subformula_size(inst: QDnfInstance) -> int:
    """Total literal count of the existential subformula."""
    return split_existential(inst).phi1_size


def kernelize_qdnf(inst: QDnfInstance, backend: OracleBackend, ledger: OracleLedger) -> QDnfInstance:
    """
    Polynomial P^NP-kernel parameterized by the existential subformula size.

    Issues exactly one tautology query (phase "kernel-qsat") on phi2.

    Returns:
        The canonical trivial-yes instance if phi2 is a tautology, else phi1
    """
    split = split_existential(inst)
    logger.debug(
        f"Split: phi1 has {len(split.phi1.formula.terms)} terms (size {split.phi1_size}), "
        f"phi2 has {len(split.phi2.terms)} terms"
    )
    if query_dnf_tautology(backend, ledger, split.phi2, PHASE):
        logger.info("Universal remainder is a tautology: kernel is trivial-yes")
        return trivial_yes_instance()
    logger.info(f"Kernel keeps the existential subformula of size {split.phi1_size}")
    return split.phi1
