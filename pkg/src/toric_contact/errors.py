"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when an input violates an operation's precondition."""


class UnsupportedShapeError(DomainError):
    """Raised for quadruples outside the (p1, p2, l, l) subfamily shape."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
