"""Exception types shared across the package."""


class GcrError(Exception):
    """Base class for all package errors."""


class FieldError(GcrError):
    """Invalid field construction or arithmetic (e.g. division by zero).

    ``pointer`` optionally holds a JSON-pointer suffix locating the offending
    member of a field descriptor.
    """

    def __init__(self, message, pointer=""):
        super().__init__(message)
        self.pointer = pointer


class ParseError(GcrError):
    """Malformed element or polynomial literal."""

    def __init__(self, message, position=None, text=None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message}{where}")
        self.position = position
        self.text = text


class DimensionError(GcrError):
    """Shape mismatch between matrices, vectors or subspaces."""


class CapabilityError(GcrError):
    """The requested operation is not available for this field or group."""


class VerificationError(GcrError):
    """An internal certificate failed its independent re-check."""


class PreconditionError(GcrError):
    """The input does not satisfy the hypotheses of the requested operation."""
