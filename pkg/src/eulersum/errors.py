"""Exception types shared across the package."""


class DomainError(ArithmeticError):
    """A request falls outside the mathematical domain of a routine."""


class DivergenceError(DomainError):
    """The series (or its tail integral) does not converge."""


class PoleError(DomainError, ZeroDivisionError):
    """A term was evaluated at a pole, e.g. 1/x**n at x = 0."""


class SeriesDivisionError(ZeroDivisionError):
    """Power-series division by a series with no usable leading coefficient."""
