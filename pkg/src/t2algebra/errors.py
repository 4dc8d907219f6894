"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Structurally malformed input: bad JSON, unsorted breakpoints, out-of-range values."""


class DomainError(ValueError):
    """Structurally valid input that violates an operation's precondition."""
