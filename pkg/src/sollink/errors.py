"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user-supplied input (bad field, matrix, range, file)."""


class ConsistencyError(RuntimeError):
    """An internal exactness or cross-check assertion failed."""
