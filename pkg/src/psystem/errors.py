"""Exception hierarchy shared across the package.

ValueError subclasses signal bad inputs (CLI exit code 2); RuntimeError
subclasses signal numerical failures (CLI exit code 3).
"""


class UsageError(ValueError):
    """Operation called with arguments outside its contract."""


class DomainError(ValueError):
    """Input outside the mathematical domain of the operation."""


class StrainDomainError(DomainError):
    """Strain at or below -1: interpenetration of matter."""


class BracketError(ValueError):
    """Root bracket does not enclose a sign change."""


class AccuracyError(RuntimeError):
    """Requested tolerance not reached; best estimate is attached."""

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate


class NoSolutionError(RuntimeError):
    """No admissible solution exists for the given data."""
