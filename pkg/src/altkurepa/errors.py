"""Exceptions raised by the library."""


class AltKurepaError(ArithmeticError):
    """Base class for all library errors."""


class PoleProximity(AltKurepaError):
    """The evaluation point lies within the pole guard of a singularity."""

    def __init__(self, message, location=None, distance=None):
        super().__init__(message)
        self.location = location
        self.distance = distance


class DomainError(AltKurepaError, ValueError):
    """Argument outside the domain where the requested routine is defined."""


class NoConvergence(AltKurepaError):
    """An iterative method did not reach its tolerance within the budget."""


class GammaOverflow(AltKurepaError, OverflowError):
    """Gamma (or a product involving it) does not fit in a double."""
