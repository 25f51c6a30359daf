"""Exception taxonomy for the halfline package.

Every error raised deliberately by this package derives from HalflineError,
so callers can catch one base class.  Several types double as the matching
builtin (ValueError, OverflowError) so generic numeric code keeps working.
"""


class HalflineError(Exception):
    """Base class for all halfline errors."""


class ConfigurationError(HalflineError):
    """Inconsistent object pairing or dimensions (basis/rule/problem/method)."""


class UsageError(HalflineError):
    """Bad command-line or config-file input; carries the offending token."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class DomainError(HalflineError, ValueError):
    """Evaluation point outside the function's domain (negative, zero, or non-finite x)."""


class UnsupportedOrderError(HalflineError, ValueError):
    """Derivative order outside the supported range 0..3."""


class UnsupportedParameterError(HalflineError, ValueError):
    """Parameter value for which no formula is available (e.g. quadrature with alpha != 1)."""


class RangeOverflowError(HalflineError, OverflowError):
    """Node generation would overflow or underflow double precision (|j*h| > 700)."""


class NodeComputationError(HalflineError):
    """Eigenvalue solve or root polish for collocation nodes failed."""


class NumericEvaluationError(HalflineError):
    """A residual or Jacobian evaluation produced a non-finite value.

    component: index of the offending residual entry, when known.
    """

    def __init__(self, message, component=None):
        super().__init__(message)
        self.component = component


class SolverError(HalflineError):
    """Base class for nonlinear-solver failures."""


class SingularJacobianError(SolverError):
    """Jacobian numerically singular (condition estimate > 1e14); carries the iterate."""

    def __init__(self, message, iterate=None, condition=None):
        super().__init__(message)
        self.iterate = iterate
        self.condition = condition


class ConvergenceError(SolverError):
    """Newton failed to converge; carries the SolveReport for post-mortem."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BlowUpError(HalflineError):
    """An integrated trajectory left the finite range; carries the abscissa reached."""

    def __init__(self, message, abscissa=None):
        super().__init__(message)
        self.abscissa = abscissa


class OracleError(HalflineError):
    """The shooting iteration failed to locate an initial slope."""
