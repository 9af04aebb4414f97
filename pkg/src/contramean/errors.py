"""Exception types raised by the library."""


class ContrameanError(Exception):
    """Base class for all library-specific errors."""


class DimensionMismatchError(ContrameanError, ValueError):
    """Operands do not share the required square dimension."""


class NotHermitianError(ContrameanError, ValueError):
    """Matrix exceeds the Hermitian symmetry tolerance."""


class NotPositiveDefiniteError(ContrameanError, ValueError):
    """Hermitian matrix has an eigenvalue at or below zero."""


class NoConvergenceError(ContrameanError, RuntimeError):
    """Eigensolver failed to converge."""


class DomainError(ContrameanError, ValueError):
    """Scalar function is undefined or non-finite on part of a spectrum."""


class DecompositionInvalidError(ContrameanError, ValueError):
    """Pair (x, y) does not satisfy x + y = identity within tolerance."""


class SingularMatrixError(ContrameanError, ValueError):
    """Matrix is too close to singular for the requested operation."""


class ZeroFunctionalError(ContrameanError, ValueError):
    """Positive linear functional has a zero weight (zero trace)."""


class LambdaOutOfRangeError(ContrameanError, ValueError):
    """Lower-bound parameter lambda lies outside [0, 1]."""
