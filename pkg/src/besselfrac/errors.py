"""Exception and warning types shared across the package."""


class BesselFracError(Exception):
    """Base class for all package errors."""


class DomainError(BesselFracError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(BesselFracError, ArithmeticError):
    """A quadrature or series did not reach the requested tolerance."""


class OscillationError(ConvergenceError):
    """The oscillatory integrand needs more panels than the budget allows."""


class InsufficientDerivativesError(BesselFracError):
    """A differential operator was applied to a function lacking derivatives."""


class DecayWarning(UserWarning):
    """A sampled function is not negligible at the edge of its support."""


class ClassCheckWarning(UserWarning):
    """A function failed a numerical membership test for a weighted space."""
