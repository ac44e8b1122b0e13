"""Exception types shared across the package.

Every error raised by this package derives from :class:`WavefallError`, so
callers can catch the whole family with one except clause.  Messages name the
offending quantity and its limit.
"""

__all__ = [
    "WavefallError",
    "GridOverflow",
    "BadSigma",
    "GridMismatch",
    "NegativeTime",
    "DegenerateInterval",
    "TooLarge",
    "NotHermitian",
    "NotUnitary",
    "SuperluminalPath",
    "BadQuadrature",
    "PhaseAliasing",
    "SchemeMismatch",
    "ConfigError",
]


class WavefallError(Exception):
    """Base class for all errors raised by this package."""


class GridOverflow(WavefallError):
    """Wave-packet amplitude reached the guarded boundary region of the grid."""


class BadSigma(WavefallError):
    """Packet width is non-positive or cannot be resolved on the grid."""


class GridMismatch(WavefallError):
    """Operands live on different grids."""


class NegativeTime(WavefallError):
    """Evolution duration must be non-negative."""


class DegenerateInterval(WavefallError):
    """Boundary-value problem needs t1 > t0."""


class TooLarge(WavefallError):
    """Dense-operator size guard exceeded."""


class NotHermitian(WavefallError):
    """Matrix expected to be Hermitian is not, beyond tolerance."""


class NotUnitary(WavefallError):
    """Matrix expected to be unitary is not, beyond tolerance."""


class SuperluminalPath(WavefallError):
    """Proper-time radicand is non-positive somewhere along the path."""


class BadQuadrature(WavefallError):
    """Quadrature sample count below the supported minimum."""


class PhaseAliasing(WavefallError):
    """Consecutive fringe-phase samples too far apart to unwrap reliably."""


class SchemeMismatch(WavefallError):
    """Interferometer branch schedules disagree about the total duration."""


class ConfigError(WavefallError):
    """Run configuration failed validation."""
