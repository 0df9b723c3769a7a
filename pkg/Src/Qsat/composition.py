"""
OR-cross-composition of exists-forall DNF instances.

Instances are identified positionally (j-th existential variable with x_j,
j-th universal with y_j) and tagged with instance-selection variables
z_1..z_L. Instance i gets the binary pattern of (i - 1), least significant
bit first, so each z-assignment leaves exactly one instance active.
"""
import logging
from typing import Dict, List, Sequence

from Src.Formula.formula import DnfFormula, Literal, QDnfInstance
from Src.Shared.errors import ShapeMismatchError

logger = logging.getLogger("workbench.qsat.composition")


def padded_count(count: int) -> int:
    """Smallest power of two >= max(count, 2)."""
    padded = 2
    while padded < count:
        padded *= 2
    return padded


def selection_pattern(index: int, selection_vars: Sequence[int]) -> List[Literal]:
    """Literals encoding `index` in binary over `selection_vars`, LSB first."""
    return [Literal(var, bool((index >> bit) & 1)) for bit, var in enumerate(selection_vars)]


def compose_qdnf_or(instances: Sequence[QDnfInstance]) -> QDnfInstance:
    """
    Compose instances into one that is yes iff some input is yes.

    Args:
        instances: Non-empty list sharing (|X|, |Y|)

    Returns:
        Instance over n1 + n2 + log2(t') variables, t' the padded count

    Raises:
        ShapeMismatchError: empty input or differing (|X|, |Y|)
    """
    if not instances:
        raise ShapeMismatchError("composition needs at least one instance")
    n1 = len(instances[0].existential)
    n2 = len(instances[0].universal)
    for position, inst in enumerate(instances, start=1):
        shape = (len(inst.existential), len(inst.universal))
        if shape != (n1, n2):
            raise ShapeMismatchError(f"instance {position} has (|X|,|Y|) = {shape}, expected {(n1, n2)}")

    padded = padded_count(len(instances))
    selection_bits = padded.bit_length() - 1
    selection_vars = [n1 + n2 + j for j in range(1, selection_bits + 1)]
    logger.info(f"Composing {len(instances)} instances (padded to {padded}) with {selection_bits} selection variables")

    all_instances = list(instances) + [instances[0]] * (padded - len(instances))
    terms = []
    for index, inst in enumerate(all_instances):
        position: Dict[int, int] = {}
        position.update({var: j for j, var in enumerate(sorted(inst.existential), start=1)})
        position.update({var: n1 + j for j, var in enumerate(sorted(inst.universal), start=1)})
        pattern = selection_pattern(index, selection_vars)
        for term in inst.formula.terms:
            renamed = [Literal(position[lit.variable], lit.polarity) for lit in term]
            terms.append(tuple(renamed + pattern))

    return QDnfInstance(
        DnfFormula(tuple(terms), n1 + n2 + selection_bits),
        set(range(1, n1 + 1)) | set(selection_vars),
        set(range(n1 + 1, n1 + n2 + 1)),
    )
