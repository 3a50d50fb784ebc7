"""Exception types raised across the package."""

from __future__ import annotations


class NFLError(Exception):
    """Base class for all package errors."""


class CodomainMismatchError(NFLError):
    """An observed objective value is not in a policy's declared codomain."""


class BudgetError(NFLError):
    """A run asked for more steps than the space (or policy) can provide."""


class EmptyTraceError(NFLError):
    pass


class EnumerationTooLargeError(NFLError):
    """Raised instead of silently sampling when an enumeration exceeds its cap."""

    def __init__(self, what: str, count: int, cap: int):
        self.what = what
        self.count = count
        self.cap = cap
        super().__init__(f"refusing to enumerate {count} {what} (cap {cap})")


class PreconditionError(NFLError):
    """An operation's input violates a stated precondition.

    ``witness`` carries whatever object demonstrates the violation, e.g. a
    permuted table missing from a set that was supposed to be CUP.
    """

    def __init__(self, message: str, witness: object = None):
        self.witness = witness
        super().__init__(message)


class DistributionError(NFLError):
    pass


class MetricError(NFLError):
    pass


class ProblemError(NFLError):
    """Malformed problem definition; ``field`` names the offending location."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
