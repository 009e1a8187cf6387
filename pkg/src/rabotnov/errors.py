"""Exception types raised across the package."""


class RabotnovError(Exception):
    """Base class for all package errors."""


class DomainError(RabotnovError, ValueError):
    """An argument lies outside the region where the operation is defined."""


class ConvergenceError(RabotnovError, ArithmeticError):
    """A series could not be truncated to the requested tolerance within the term cap."""


class PoleError(RabotnovError, ZeroDivisionError):
    """A ratio denominator is numerically indistinguishable from zero."""


class HypothesisError(RabotnovError, ValueError):
    """The parameters violate the hypothesis of the inequality being verified."""


class DegenerateDenominatorError(RabotnovError, ArithmeticError):
    """Every sample of a verification grid was discarded as pole-proximate."""
