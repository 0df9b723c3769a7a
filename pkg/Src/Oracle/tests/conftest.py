"""
Shared pytest fixtures for Oracle tests.
"""
import subprocess
from unittest.mock import MagicMock

import pytest


@pytest.fixture
def completed_process():
    """Factory for fake `subprocess.run` results."""
    def _make(stdout: str, stderr: str = "", returncode: int = 10) -> MagicMock:
        result = MagicMock(spec=subprocess.CompletedProcess)
        result.stdout = stdout
        result.stderr = stderr
        result.returncode = returncode
        return result
    return _make
