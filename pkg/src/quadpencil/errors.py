"""Exception types shared across the package."""


class InputError(ValueError):
    """Curve, divisor or configuration data that violates a stated constraint."""


class VerificationError(RuntimeError):
    """A numerical or exact consistency check failed."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalError(AssertionError):
    """Two routes that must agree did not; indicates a bug or bad precondition."""
