"""
Shared library pytest configuration and fixtures.

This conftest.py provides:
- A list of recorded-query rows for history tests
- A logger reset so setup_logging tests start clean
"""
import logging
from dataclasses import dataclass
from typing import List

import pytest


# =============================================================================
# Query Fixtures
# =============================================================================
@dataclass(frozen=True)
class Query:
    phase: str
    variable_count: int
    clause_count: int
    satisfiable: bool


@pytest.fixture
def busy_queries() -> List[Query]:
    """Three queries over two phases."""
    return [
        Query("kernel-qsat", 4, 6, True),
        Query("fptnp-few", 3, 2, False),
        Query("fptnp-few", 3, 2, True),
    ]


# =============================================================================
# Logging Fixtures
# =============================================================================
@pytest.fixture
def clean_workbench_logger():
    """
    Detach handlers from the workbench logger for the duration of a test.
    """
    logger = logging.getLogger("workbench")
    saved_handlers = list(logger.handlers)
    saved_level = logger.level
    logger.handlers.clear()
    yield logger
    logger.handlers[:] = saved_handlers
    logger.setLevel(saved_level)
