"""
Exception hierarchy shared by every workbench component.
"""
from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class FormatError(WorkbenchError):
    """Instance text does not conform to its format."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        self.detail = message
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InvalidInstanceError(WorkbenchError, ValueError):
    """A value violates an invariant of its type."""


class GuardExceededError(WorkbenchError):
    """A brute-force routine was asked to go beyond its size guard."""


class ShapeMismatchError(WorkbenchError):
    """Composition inputs are not equivalent, or parameters are out of range."""


class MalformedInstanceError(WorkbenchError):
    """The input breaks a problem promise (e.g. S is not a minimal cover)."""


class OracleFailureError(WorkbenchError):
    """The NP-oracle did not produce a usable verdict."""


class OracleIntegrityError(OracleFailureError):
    """The oracle produced a witness that does not check out."""
