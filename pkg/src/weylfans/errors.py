"""Exception types shared across the package."""


class WeylfansError(Exception):
    """Base class for all package errors."""


class InvalidInput(WeylfansError, ValueError):
    """A caller violated a documented precondition."""


class BasisChangeError(InvalidInput):
    """The requested basis is not defined for this vector's span."""


class BoundExceeded(InvalidInput):
    """An enumeration was refused because it would exceed the given bound."""


class InvariantViolation(WeylfansError, RuntimeError):
    """An internal mathematical invariant failed; this is a library bug."""
