"""Exception hierarchy.

Everything raised on purpose by this package derives from :class:`MatineqError`
so callers can distinguish our diagnostics from genuine bugs.
"""


class MatineqError(Exception):
    """Base class for all matineq errors."""


class InvalidMatrix(MatineqError, ValueError):
    """Input is not a finite square complex matrix."""


class DimensionMismatch(MatineqError, ValueError):
    """Operands have incompatible shapes."""


class NotHermitian(MatineqError, ValueError):
    """Matrix fails the Hermitian symmetry tolerance."""


class NotPSD(MatineqError, ValueError):
    """Matrix has an eigenvalue below the positive-semidefinite tolerance."""


class SingularForNegativePower(MatineqError, ValueError):
    """Negative matrix power requested for a singular (or near-singular) matrix."""


class NoConvergence(MatineqError, RuntimeError):
    """An eigenvalue / singular value iteration did not converge."""


class DomainViolation(MatineqError, ValueError):
    """A spectrum point lies outside the scalar function's domain."""


class InvalidSpec(MatineqError, ValueError):
    """Malformed norm selector (bad Schatten p or Ky Fan k)."""


class BudgetExceeded(MatineqError, RuntimeError):
    """Adaptive quadrature hit its subdivision budget before reaching tol."""


class InvalidParams(MatineqError, ValueError):
    """Inequality parameters outside their mandated domain."""


class KwongPreconditionFailed(MatineqError, ValueError):
    """f/g is not Kwong on the sampled spectrum, or f*g > t on it."""


class ConfigError(MatineqError, ValueError):
    """Invalid trial/suite configuration."""
