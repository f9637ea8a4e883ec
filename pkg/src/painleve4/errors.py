"""Exception types shared across the package."""


class P4Error(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(P4Error, ZeroDivisionError):
    """Division by the zero polynomial or the zero rational function."""


class NonRationalIntegral(P4Error):
    """The antiderivative has a logarithmic part, i.e. is not a rational function."""


class SingularFamily(P4Error):
    """A Wronskian determinant vanishes identically (linearly dependent entries)."""


class ZeroFunction(P4Error):
    """An identically zero function appeared where a nonzero one is required.

    ``position`` carries the failing step index when raised while walking a
    transformation word.
    """

    def __init__(self, message: str = "", position: int | None = None):
        super().__init__(message)
        self.position = position


class DegenerateRho(P4Error):
    """rho has identically vanishing x-derivative; no y-construction exists."""


class IrrationalMu(P4Error):
    """mu^2 is not the square of a rational number."""


class DegenerateDenominator(P4Error):
    """A reconstruction denominator vanishes identically."""
