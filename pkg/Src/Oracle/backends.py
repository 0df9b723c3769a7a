"""
SAT backends for the NP oracle.

Two implementations share one interface: the builtin DPLL solver and an
external DIMACS solver run as a subprocess. The external solver must
print a competition-style verdict line ("s SATISFIABLE" or
"s UNSATISFIABLE") and, for satisfiable inputs, "v" model lines.

Environment variables:
    ORACLE_SOLVER_CMD: command template for the external solver. "{cnf}" is
        replaced by the input path; without it the path is appended.
    ORACLE_TIMEOUT: per-query timeout in seconds (default 60)
"""
import logging
import os
import shlex
import subprocess
import tempfile
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from Src.Formula.codecs import serialize_dimacs_cnf
from Src.Formula.formula import CnfFormula
from Src.Shared.errors import OracleFailureError, OracleIntegrityError

from .dpll import DpllSolver

logger = logging.getLogger("workbench.oracle.backends")

BUILTIN = "builtin"
EXTERNAL = "external"
DEFAULT_TIMEOUT = 60.0

Decision = Tuple[bool, Optional[Dict[int, bool]]]


def parse_solver_output(stdout: str, variable_count: int) -> Decision:
    """
    Read a verdict and model from solver output.

    Variables absent from the "v" lines are set to False. A satisfiable
    verdict without any "v" line yields no model, as printed by solvers
    that only decide.

    Raises:
        OracleFailureError: no verdict line, or a verdict other than
            SATISFIABLE/UNSATISFIABLE
        OracleIntegrityError: a model literal outside 1..variable_count
    """
    verdict: Optional[bool] = None
    literals: List[int] = []
    has_model = False
    for raw in stdout.splitlines():
        line = raw.strip()
        if line.startswith("s "):
            status = line[2:].strip()
            if status == "SATISFIABLE":
                verdict = True
            elif status == "UNSATISFIABLE":
                verdict = False
            else:
                raise OracleFailureError(f"solver reported {status!r}")
        elif line.startswith("v ") or line == "v":
            has_model = True
            for token in line.split()[1:]:
                try:
                    literals.append(int(token))
                except ValueError:
                    raise OracleIntegrityError(f"non-integer model token {token!r}")

    if verdict is None:
        raise OracleFailureError("solver output has no verdict line")
    if not verdict:
        return False, None
    if not has_model:
        return True, None

    model ={var: False for var in range(1, variable_count + 1)}
    for value in literals:
        if value == 0:
            break
        if abs(value) > variable_count:
            raise OracleIntegrityError(f"model literal {value} outside 1..{variable_count}")
        model[abs(value)] = value > 0
    return True, model


def build_command(template: str, cnf_path: str) -> List[str]:
    """Split a command template and insert the CNF path."""
    args = shlex.split(template)
    if not args:
        raise OracleFailureError("empty solver command")
    if any("{cnf}" in arg for arg in args):
        return [arg.replace("{cnf}", cnf_path) for arg in args]
    return args + [cnf_path]


@dataclass(frozen=True)
class OracleBackend:
    """
    A configured SAT backend.

    Attributes:
        kind: "builtin" or "external"
        command: command template for the external solver
        timeout: per-query timeout in seconds (external only)
    """
    kind: str = BUILTIN
    command: Optional[str] = None
    timeout: float = DEFAULT_TIMEOUT

    def __post_init__(self):
        if self.kind not in (BUILTIN, EXTERNAL):
            raise ValueError(f"unknown oracle backend {self.kind!r}")
        if self.kind == EXTERNAL and not self.command:
            raise ValueError("external backend needs a solver command")

    @classmethod
    def builtin(cls) -> "OracleBackend":
        return cls(BUILTIN)

    @classmethod
    def external(cls, command: str, timeout: float = DEFAULT_TIMEOUT) -> "OracleBackend":
        return cls(EXTERNAL, command, timeout)

    @classmethod
    def from_environment(cls, kind: Optional[str] = None) -> "OracleBackend":
        """
        Build a backend from ORACLE_SOLVER_CMD / ORACLE_TIMEOUT.

        Args:
            kind: force "builtin" or "external"; by default external is used
                when ORACLE_SOLVER_CMD is set
        """
        command = os.getenv("ORACLE_SOLVER_CMD")
        timeout = float(os.getenv("ORACLE_TIMEOUT", str(DEFAULT_TIMEOUT)))
        if kind is None:
            kind = EXTERNAL if command else BUILTIN
        if kind == EXTERNAL:
            if not command:
                raise OracleFailureError("external backend selected but ORACLE_SOLVER_CMD is not set")
            return cls.external(command, timeout)
        return cls.builtin()

    @property
    def name(self) -> str:
        return self.kind

    def decide(self, cnf: CnfFormula) -> Decision:
        """
        Decide one CNF.

        Returns:
            (satisfiable, model over 1..variable_count or None)
        """
        if self.kind == BUILTIN:
            model = DpllSolver().solve(cnf)
            return model is not None, model
        return self._decide_external(cnf)

    def _decide_external(self, cnf: CnfFormula) -> Decision:
        fd, path = tempfile.mkstemp(suffix=".cnf", prefix="oracle_")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(serialize_dimacs_cnf(cnf))
            args = build_command(self.command, path)
            logger.debug(f"Running external solver: {' '.join(args)}")
            try:
                result = subprocess.run(args, capture_output=True, text=True, timeout=self.timeout)
            except subprocess.TimeoutExpired:
                raise OracleFailureError(f"external solver timed out after {self.timeout}s")
            except OSError as e:
                raise OracleFailureError(f"could not run external solver: {e}")
            if result.stderr:
                logger.debug(f"Solver stderr: {result.stderr.strip()}")
            return parse_solver_output(result.stdout, cnf.variable_count)
        finally:
            try:
                os.remove(path)
            except OSError:
                logger.warning(f"Could not remove temporary CNF file {path}")
