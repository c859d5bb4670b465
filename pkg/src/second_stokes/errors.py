"""Exception hierarchy shared by all modules."""


class SecondStokesError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SecondStokesError, ValueError):
    """Input lies outside the mathematical domain of an operation."""


class SingularityError(SecondStokesError):
    """A denominator (near-)vanished at a reported location."""

    def __init__(self, message: str, where: float | complex | None = None):
        super().__init__(message)
        self.where = where


class ResolutionError(SecondStokesError):
    """Adaptive refinement hit its depth cap before meeting the target."""


class NearCriticalError(SecondStokesError):
    """Winding endpoint too ambiguous to classify the spectrum."""


class NoDiscreteSpectrumError(SecondStokesError):
    """The dispersion function has no zeros for these parameters."""


class ConvergenceError(SecondStokesError):
    """An iterative solver failed to converge within its budget."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class RegimeError(SecondStokesError):
    """Operation invoked in the wrong spectral index regime."""


class DegenerateDenominatorError(SecondStokesError):
    """A closed-form denominator vanished; parameters are outside the supported box."""


class UsageError(SecondStokesError):
    """Caller supplied mutually inconsistent arguments."""
