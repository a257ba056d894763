"""Exception types shared across the package."""


class RotheError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(RotheError, ValueError):
    """An argument violates a documented precondition."""


class ResourceCapError(RotheError):
    """An enumeration or scan would exceed its configured cap."""


class ContractViolationError(RotheError):
    """An internal invariant that should be unreachable was violated.

    Raised when a theorem-backed assertion fails at runtime; it signals a
    bug or a precondition breach by the caller, never a normal outcome.
    """


class NotApplicableError(RotheError):
    """The requested computation is undefined for this input."""

    def __init__(self, message, pattern=None, positions=None):
        super().__init__(message)
        self.pattern = pattern
        self.positions = positions
