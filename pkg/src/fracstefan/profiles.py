"""Scalar profile functions whose level sets determine the similarity variable.

With ``f(x) = 1 - W(-x, -alpha/2, 1)``::

    F(x) = f(x) / x            decreasing, 1/Gamma(1 - alpha/2) -> 0
    G(x) = x f(x)              increasing, 0 -> inf
    H(x) = x f(x) / M(x)       increasing, 0 -> inf
    M(x) = M_{alpha/2}(x)      decreasing, 1/Gamma(1 - alpha/2) -> 0

``M`` is the Mainardi function.
"""

from __future__ import annotations

import enum
import math

from .errors import DomainError
from .specfun import DEFAULT_POLICY, SeriesPolicy, mainardi, reciprocal_gamma, wright_complement

__all__ = [
    "ProfileKind",
    "f_alpha",
    "profile_eval",
    "profile_range",
    "profile_direction",
]


class ProfileKind(enum.Enum):
    F = "F"
    G = "G"
    H = "H"
    M = "M"
    f = "f"


_DECREASING = frozenset({ProfileKind.F, ProfileKind.M})


def _check_alpha(alpha: float) -> None:
    # alpha = 1 is allowed so the classical limit can be evaluated on the same path
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha={alpha!r} outside (0, 1]")


def f_alpha(x: float, alpha: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """``1 - W(-x, -alpha/2, 1)``; lies in (0, 1) and increases with ``x``."""
    _check_alpha(alpha)
    if not x > 0:
        raise DomainError(f"profile argument must be positive, got {x!r}")
    return wright_complement(x, alpha / 2.0, policy)


def profile_eval(kind: ProfileKind, x: float, alpha: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    kind = ProfileKind(kind)
    if kind is ProfileKind.M:
        _check_alpha(alpha)
        if not x > 0:
            raise DomainError(f"profile argument must be positive, got {x!r}")
        return mainardi(x, alpha / 2.0, policy)
    f = f_alpha(x, alpha, policy)
    if kind is ProfileKind.f:
        return f
    if kind is ProfileKind.F:
        return f / x
    if kind is ProfileKind.G:
        return x * f
    return x * f / mainardi(x, alpha / 2.0, policy)


def profile_range(kind: ProfileKind, alpha: float) -> tuple[float, float]:
    """Open interval of values attained by the profile on ``(0, inf)``."""
    kind = ProfileKind(kind)
    _check_alpha(alpha)
    if kind in _DECREASING:
        return 0.0, reciprocal_gamma(1.0 - alpha / 2.0)
    if kind is ProfileKind.f:
        return 0.0, 1.0
    return 0.0, math.inf


def profile_direction(kind: ProfileKind) -> str:
    return "decreasing" if ProfileKind(kind) in _DECREASING else "increasing"
