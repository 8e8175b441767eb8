"""
Custom exception classes and exit-code mapping for WittLab.
"""

from typing import Any, Optional

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFICATION_FAILED = 2


class WittLabException(Exception):
    """Base exception for WittLab."""

    exit_code: int = EXIT_INPUT_ERROR

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class InvalidInput(WittLabException):
    """Raised when a command option or payload fails validation."""

    pass


class PayloadParseError(InvalidInput):
    """Raised when a polynomial payload is malformed; carries where it broke."""

    def __init__(
        self,
        message: str,
        position: Optional[int] = None,
        path: Optional[str] = None,
    ):
        self.position = position
        self.path = path
        where = []
        if position is not None:
            where.append(f"position {position}")
        if path:
            where.append(f"at {path}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message, details={"position": position, "path": path})


class DomainError(WittLabException):
    """Raised when an operation is applied outside of its domain."""

    pass


class InexactDivisionError(WittLabException):
    """Raised by divexact when the remainder is nonzero."""

    pass


class SymmetryError(WittLabException):
    """Raised when a polynomial expected to be symmetric is not."""

    pass


class ContextMismatchError(WittLabException):
    """Raised when Witt vectors from different contexts are combined."""

    pass


class InternalConsistencyError(WittLabException):
    """Raised when a self-check fails; signals an implementation bug."""

    exit_code = EXIT_VERIFICATION_FAILED


class CacheCorruptError(WittLabException):
    """Raised when a universal-polynomial cache file does not validate."""

    def __init__(self, message: str, path: Any = None):
        hint = "run `wittlab cache clear` and then `wittlab cache build`"
        super().__init__(f"{message}; {hint}", details={"path": str(path) if path else None})


def raise_invalid_input(message: str, field: Optional[str] = None) -> None:
    """
    Raise InvalidInput with a descriptive message.

    Args:
        message: Description of what's invalid
        field: Option name that's invalid (optional)

    Raises:
        InvalidInput
    """
    if field:
        detail = f"Invalid value for '{field}': {message}"
    else:
        detail = message

    raise InvalidInput(detail, details={"field": field} if field else None)


def exit_code_for(error: Exception) -> int:
    """Map an exception raised by a command to the CLI exit-code contract."""
    if isinstance(error, WittLabException):
        return error.exit_code
    return EXIT_VERIFICATION_FAILED
