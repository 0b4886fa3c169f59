"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation.

    NaN inputs always raise this rather than propagating through
    computations.
    """


class UnsupportedOperationError(ValueError):
    """The requested quantity is not available for this family."""


class ConvergenceError(RuntimeError):
    """An iterative routine exhausted its budget.

    The best partial result is attached as ``partial`` so callers can
    inspect how far the computation got.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
