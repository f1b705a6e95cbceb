"""Shared exception types.

A ``DomainError`` marks an input that is outside an operation's mathematical
domain (wrong cone, non-coprime pair, reducible braid family, ...).  An
``InconclusiveError`` marks a computation that ran out of budget without
reaching a verdict; it must never be confused with a negative answer.
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of the operation."""


class InconclusiveError(RuntimeError):
    """Computation exhausted its budget without producing a verdict."""


class LimitExceededError(InconclusiveError):
    """An enumeration grew past the caller-supplied limit.

    Carries the partial result so callers can inspect how far the
    computation got.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
