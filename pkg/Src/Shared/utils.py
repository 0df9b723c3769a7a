"""
Utility functions for path resolution and logging.
"""
import logging
from pathlib import Path

# This file is at: Src/Shared/utils.py
_PROJECT_ROOT = Path(__file__).parent.parent.parent.resolve()


def get_project_root() -> Path:
    """Return the absolute path to the project root."""
    return _PROJECT_ROOT


def setup_logging(log_level: str = "WARNING") -> logging.Logger:
    """
    Set up logging configuration for the workbench logger tree.

    Log records go to stderr; stdout is kept for reports and instance text.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger("workbench")
    logger.setLevel(getattr(logging, log_level.upper()))

    # Avoid duplicate handlers
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(getattr(logging, log_level.upper()))
        return logger

    console_handler = logging.StreamHandler()
    console_handler.setLevel(getattr(logging, log_level.upper()))

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    console_handler.setFormatter(formatter)

    logger.addHandler(console_handler)
    return logger


def ensure_parent_exists(path: Path) -> None:
    """
    Create the parent directory of a file path if it doesn't exist (idempotent).

    Args:
        path: File path whose directory should exist
    """
    path.parent.mkdir(parents=True, exist_ok=True)
