"""Exception types raised by :mod:`fracstefan`."""

from __future__ import annotations


class FracStefanError(Exception):
    """Base class for every error raised by the package."""


class DomainError(FracStefanError, ValueError):
    """An argument lies outside the domain where a function is supported."""


class DomainBoundExceeded(DomainError):
    """The similarity variable would leave the supported Wright-function domain."""


class NonConvergenceError(FracStefanError, ArithmeticError):
    """A series or iteration hit its budget before meeting its stopping rule."""


class RangeError(FracStefanError, ValueError):
    """A root-finding target lies outside the attainable range of the function."""


class BracketError(FracStefanError, RuntimeError):
    """Geometric bracket expansion failed to straddle the target."""


class MissingCoefficientError(FracStefanError, ValueError):
    """A thermal coefficient required by the chosen case was not supplied."""


class InadmissibleError(FracStefanError):
    """Data violate the existence condition of the chosen case.

    ``condition`` is the short condition label (``"Cond-lc"`` or ``"Cond-ck"``)
    and ``value`` the evaluated left-hand side of the strict inequality.
    """

    def __init__(self, condition: str, value: float, message: str) -> None:
        super().__init__(message)
        self.condition = condition
        self.value = value


class ResidualCheckError(FracStefanError, ArithmeticError):
    """Recovered coefficients fail to satisfy the characterizing system."""


class ProbeError(FracStefanError):
    """A convergence probe failed at a particular fractional order."""

    def __init__(self, alpha: float, cause: Exception) -> None:
        super().__init__(f"probe failed at alpha={alpha!r}: {cause}")
        self.alpha = alpha
        self.cause = cause
