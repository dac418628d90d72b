"""Exceptions shared across the package."""


class UserInputError(ValueError):
    """Invalid user-supplied data (bad type/rank, malformed weight, ...)."""


class ResourceCapError(RuntimeError):
    """A computation would exceed a configured size cap."""


class InternalCheckError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
