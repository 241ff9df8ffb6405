"""Exception types shared by all modules."""


class IwsurvError(Exception):
    """Base class for every error raised by this package."""


class DomainError(IwsurvError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class MomentError(DomainError):
    """A requested moment does not exist for the given shape parameter."""


class BracketError(IwsurvError):
    """A root-finding bracket does not enclose a sign change."""


class ConvergenceError(IwsurvError):
    """Iteration budget exhausted; carries the best point found so far."""

    def __init__(self, message, best_x=None, best_f=None):
        super().__init__(message)
        self.best_x = best_x
        self.best_f = best_f


class FitError(IwsurvError):
    """A model could not be fitted to the sample."""


class CoefficientError(DomainError):
    """Cumulative-hazard coefficients violate the positivity requirement."""


class UndefinedStatisticError(IwsurvError):
    """A statistic is undefined for the sample (e.g. zero variance)."""


class StudyError(IwsurvError):
    """Too many Monte Carlo replicates were discarded to trust the result."""
