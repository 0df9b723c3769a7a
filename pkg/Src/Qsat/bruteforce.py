"""
Exhaustive decision of exists-forall DNF. The verification oracle for every
other qsat algorithm; never touches the NP-oracle.
"""
import logging

from Src.Formula.formula import QDnfInstance, brute_force_tautology, iter_assignments, restrict_dnf
from Src.Shared.errors import GuardExceededError

logger = logging.getLogger("workbench.qsat.bruteforce")

DEFAULT_QDNF_GUARD = 26


def decide_qdnf_bruteforce(inst: QDnfInstance, guard: int = DEFAULT_QDNF_GUARD) -> bool:
    """
    Decide an instance by enumerating every existential and universal assignment.

    Args:
        inst: The instance
        guard: Maximum |X| + |Y|

    Returns:
        True iff some X-assignment makes the formula true under every Y-assignment

    Raises:
        GuardExceededError: |X| + |Y| exceeds the guard
    """
    total = len(inst.existential) + len(inst.universal)
    if total > guard:
        raise GuardExceededError(f"|X|+|Y| = {total} exceeds brute-force guard {guard}")

    for x_assignment in iter_assignments(inst.existential):
        if brute_force_tautology(restrict_dnf(inst.formula, x_assignment)):
            logger.debug(f"Brute force: witness {x_assignment.as_dict()}")
            return True
    return False
