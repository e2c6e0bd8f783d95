"""Exception types shared by all modules."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class PrecisionError(ArithmeticError):
    """Cancellation ate too many digits; retry with a higher-precision context."""


class ResourceError(RuntimeError):
    """Requested computation exceeds a configured size cap."""


class PrecisionWarning(UserWarning):
    """Working precision is below the recommended level for the request."""
