"""Error types shared across the package."""


class InputError(ValueError):
    """Malformed or inadmissible input data (CLI exit code 2)."""


class InternalInconsistencyError(AssertionError):
    """Two independent evaluation paths disagreed (CLI exit code 3).

    This is a bug signal, never a property of the input.
    """
