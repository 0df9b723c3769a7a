"""
Workbench pytest configuration and fixtures.

This conftest.py provides:
- Instance texts for CLI and codec tests
- A `run_cli` helper returning (exit status, stdout)
- Logger cleanup so handlers never outlive a test's captured streams
"""
import logging
from pathlib import Path
from typing import Callable, Tuple

import pytest

from Src.Workbench.cli import run_command

WORKED_QDNF = """c worked example
p qdnf 6 3
e 1 2 0
a 3 4 5 6 0
1 -2 3 0
-3 4 0
5 -6 0
"""

TWO_TERM_QDNFS = [
    "p qdnf 2 2\ne 1 0\na 2 0\n1 0\n2 0\n",
    "p qdnf 2 2\ne 1 0\na 2 0\n-1 0\n2 0\n",
    "p qdnf 2 2\ne 1 0\na 2 0\n1 0\n-2 0\n",
    "p qdnf 2 2\ne 1 0\na 2 0\n-1 0\n-2 0\n",
]

GADGET_BUNDLE = """p dvcr 4
s 1 3 0
t 2 4 0
k 3
l 5
pair 1 2
p cnf 0 0
end
pair 1 4
p cnf 2 3
1 2 0
-1 0
-2 0
end
pair 2 3
p cnf 0 0
end
pair 3 4
p cnf 0 0
end
"""

SAT_GADGET_BUNDLE = GADGET_BUNDLE.replace("p cnf 2 3\n1 2 0\n-1 0\n-2 0\n", "p cnf 2 1\n1 2 0\n")

TRIANGLE_GRAPH = "p graph 3 3\ne 1 2\ne 2 3\ne 1 3\nparam 0 3\n"


@pytest.fixture(autouse=True)
def reset_workbench_logging():
    """Drop handlers installed by setup_logging during the test."""
    yield
    logger = logging.getLogger("workbench")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], str]:
    """Write text under tmp_path and return the path as a string."""
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


@pytest.fixture
def run_cli(capsys) -> Callable[..., Tuple[int, str]]:
    """Run the CLI and return (exit status, captured stdout)."""
    def _run(*argv: str) -> Tuple[int, str]:
        status = run_command(list(argv))
        return status, capsys.readouterr().out
    return _run
