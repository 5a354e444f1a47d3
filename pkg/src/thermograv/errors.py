"""Exception types raised by thermograv."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class MomentRangeError(DomainError, OverflowError):
    """Requested exponential moment exceeds the supported order."""


class ConvergenceError(ArithmeticError):
    """A series or quadrature did not converge within its budget.

    The best available estimate is kept on ``estimate`` so callers can
    still inspect it.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class NoCrossingError(LookupError):
    """The correction factor never crosses the requested threshold."""
