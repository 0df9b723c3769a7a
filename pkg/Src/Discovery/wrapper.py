"""
Generic discovery kernel: discover the hidden structure, kernelize it with
a kernel for the explicit problem, and hide the result again behind
trivial CNFs.
"""
import logging
from typing import Callable

from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger

from .incidence import IncidenceSpec, Structure, discover_incidences, wrap_structure

logger = logging.getLogger("workbench.discovery.wrapper")

BaseKernelizer = Callable[[Structure], Structure]


def discovery_kernel_wrap(
    spec: IncidenceSpec,
    base_kernelizer: BaseKernelizer,
    backend: OracleBackend,
    ledger: OracleLedger,
) -> IncidenceSpec:
    """
    Args:
        spec: The discovery instance's incidence spec
        base_kernelizer: Answer-preserving kernel on the discovered structure
        backend: SAT backend
        ledger: Session ledger; gains one "discover" query per pair plus
            whatever the base kernelizer asks

    Returns:
        Incidence spec of the kernel structure with constant-size CNFs
    """
    structure = discover_incidences(spec, backend, ledger)
    kernel = base_kernelizer(structure)
    wrapped = wrap_structure(kernel)
    logger.info(f"Wrapped kernel: {len(wrapped.pairs())} index pairs (input had {len(spec.pairs())})")
    return wrapped
