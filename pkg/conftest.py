"""
Project-wide pytest configuration and pytest-bdd fixtures.

This conftest.py provides:
- Project root on sys.path so `Src.*` imports resolve
- Test markers (unit / integration / slow / external)
- Shared oracle fixtures used by every package's tests
"""
import sys
from pathlib import Path

import pytest

# Add project root to Python path for imports
PROJECT_ROOT = Path(__file__).parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from Src.Oracle.backends import OracleBackend  # noqa: E402
from Src.Oracle.ledger import OracleLedger  # noqa: E402


# =============================================================================
# Test Markers Configuration
# =============================================================================
def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers", "unit: Fast tests (builtin oracle, no I/O)"
    )
    config.addinivalue_line(
        "markers", "integration: Tests touching the filesystem, the history DB or the CLI"
    )
    config.addinivalue_line(
        "markers", "slow: Randomized cross-checks against brute force"
    )
    config.addinivalue_line(
        "markers", "external: Requires an external SAT solver in ORACLE_SOLVER_CMD"
    )


# =============================================================================
# Project-Wide Fixtures
# =============================================================================
@pytest.fixture(scope="session")
def project_root() -> Path:
    """Return the project root directory."""
    return PROJECT_ROOT


@pytest.fixture
def backend() -> OracleBackend:
    """The builtin DPLL backend."""
    return OracleBackend.builtin()


@pytest.fixture
def ledger() -> OracleLedger:
    """A fresh ledger for one test."""
    return OracleLedger()


@pytest.fixture
def history_db(tmp_path: Path, monkeypatch) -> Path:
    """
    Point WORKBENCH_DATABASE_URL at a temporary sqlite file.

    The engine is recreated on URL change, so each test gets its own database.
    """
    db_path = tmp_path / "history.db"
    monkeypatch.setenv("WORKBENCH_DATABASE_URL", f"sqlite:///{db_path}")
    return db_path


# =============================================================================
# pytest-bdd Fixtures (for Gherkin feature files)
# =============================================================================
try:
    from pytest_bdd import given, when, then, parsers  # noqa: F401

    @pytest.fixture
    def bdd_context():
        """
        Shared context dictionary for passing data between BDD steps.
        """
        return {}

except ImportError:
    # pytest-bdd not installed, skip BDD fixtures
    pass
