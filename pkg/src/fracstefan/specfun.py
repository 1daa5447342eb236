"""Special functions for time-fractional similarity solutions.

Gamma, its reciprocal, erf, the Wright function

    W(z, a, b) = sum_k z**k / (k! Gamma(a k + b)),      -1 < a < 0,

the Mainardi function ``M_nu(x) = W(-x, -nu, 1 - nu)`` and the Caputo
derivative of a power of ``t``.

For negative ``z`` the Wright series alternates and its terms grow well above
the sum before they decay; at ``|z| = 8`` the largest term exceeds the result
by up to ten orders of magnitude.  :func:`wright` therefore sums the series
first and, when the accumulated rounding bound is too large relative to the
sum, switches to a positive-integrand quadrature (Kanter's representation of
the one-sided stable law) for the two parameter pairs that have one:
``b = 1`` and ``b = 1 + a``.  Those are the only pairs the Stefan solution
uses.  Other ``b`` values return the series sum, which is then accurate in
the absolute sense only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import integrate

from .errors import DomainError, NonConvergenceError

__all__ = [
    "SeriesPolicy",
    "WrightArgs",
    "DEFAULT_POLICY",
    "gamma",
    "reciprocal_gamma",
    "erf",
    "wright",
    "wright_complement",
    "mainardi",
    "wright_derivative_check",
    "caputo_power",
]

_EPS = 2.0**-52
_LOG_PI = math.log(math.pi)
# |1/Gamma(x)| overflows a double for x below about -170.
_DIRECT_RGAMMA_MIN = -150.0
# Series results whose rounding bound exceeds this relative level are
# recomputed by quadrature when a representation exists.
_SERIES_REL_BUDGET = 1e-14


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation controls for the Wright series."""

    relative_term_cutoff: float = 1e-16
    max_terms: int = 500
    domain_bound: float = 8.0

    def __post_init__(self) -> None:
        if not self.relative_term_cutoff > 0:
            raise ValueError("relative_term_cutoff must be positive")
        if self.max_terms < 50:
            raise ValueError("max_terms must be at least 50")
        if not self.domain_bound > 0:
            raise ValueError("domain_bound must be positive")


DEFAULT_POLICY = SeriesPolicy()


@dataclass(frozen=True)
class WrightArgs:
    """Validated arguments of ``W(z, a, b)`` with ``-1 < a < 0``."""

    z: float
    a: float
    b: float

    def __post_init__(self) -> None:
        if not -1.0 < self.a < 0.0:
            raise DomainError(f"Wright parameter a={self.a!r} outside (-1, 0)")
        if not (math.isfinite(self.z) and math.isfinite(self.b)):
            raise DomainError("Wright arguments must be finite")


def gamma(x: float) -> float:
    """Gamma function for ``x > 0``."""
    if not x > 0:
        raise DomainError(f"gamma requires x > 0, got {x!r}")
    return math.gamma(x)


def _sinpi(x: float) -> float:
    # Reduce first: sin(pi*x) for large x loses all relative accuracy near
    # integers otherwise.
    n = round(x)
    s = math.sin(math.pi * (x - n))
    return -s if n % 2 else s


def _log_abs_rgamma(x: float) -> tuple[float, float]:
    """Return ``(sign, log|1/Gamma(x)|)``; sign is 0 at the poles of Gamma."""
    if x > 0:
        return 1.0, -math.lgamma(x)
    if x == math.floor(x):
        return 0.0, -math.inf
    s = _sinpi(x)
    return math.copysign(1.0, s), math.log(abs(s)) + math.lgamma(1.0 - x) - _LOG_PI


def reciprocal_gamma(x: float) -> float:
    """Return ``1/Gamma(x)``, an entire function; exactly zero at 0, -1, -2, ...

    Negative arguments use the reflection formula
    ``1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi``.
    """
    if x > 0:
        if x > 171.0:
            return math.exp(-math.lgamma(x))
        return 1.0 / math.gamma(x)
    if x == math.floor(x):
        return 0.0
    if 1.0 - x > 171.0:
        sign, logv = _log_abs_rgamma(x)
        return sign * math.exp(logv)
    return _sinpi(x) * math.gamma(1.0 - x) / math.pi


def erf(x: float) -> float:
    """Standard error function, ``2/sqrt(pi) * int_0^x exp(-s**2) ds``."""
    return math.erf(x)


class _Neumaier:
    __slots__ = ("total", "comp")

    def __init__(self) -> None:
        self.total = 0.0
        self.comp = 0.0

    def add(self, value: float) -> None:
        t = self.total + value
        if abs(self.total) >= abs(value):
            self.comp += (self.total - t) + value
        else:
            self.comp += (value - t) + self.total
        self.total = t

    @property
    def value(self) -> float:
        return self.total + self.comp


def _series(z: float, a: float, b: float, policy: SeriesPolicy, start: int = 0) -> tuple[float, float]:
    """Sum terms ``k >= start`` of the Wright series.

    Returns the compensated sum and the sum of absolute values of the terms,
    the latter being what bounds the rounding error.
    """
    acc = _Neumaier()
    abs_sum = 0.0
    power = 1.0  # z**k / k!
    prev = None
    past_peak = False
    streak = 0
    for k in range(policy.max_terms):
        if k:
            power *= z / k
        if k < start:
            continue
        g = a * k + b
        if power != 0.0 and g > _DIRECT_RGAMMA_MIN:
            term = power * reciprocal_gamma(g)
        else:
            # z**k/k! may underflow while 1/Gamma(g) is huge
            sign, logv = _log_abs_rgamma(g)
            log_power = k * math.log(abs(z)) - math.lgamma(k + 1.0)
            parity = -1.0 if (z < 0 and k % 2) else 1.0
            if sign and log_power + logv > 709.0:
                raise NonConvergenceError(f"Wright series W({z!r}, {a!r}, {b!r}) overflows a double")
            term = parity * sign * math.exp(log_power + logv) if sign else 0.0
        if not math.isfinite(term):
            raise NonConvergenceError(f"Wright series W({z!r}, {a!r}, {b!r}) overflows a double")
        acc.add(term)
        mag = abs(term)
        abs_sum += mag
        if g <= 0.0 and g == math.floor(g):
            # exact zeros at Gamma poles neither signal decay nor break a streak
            continue
        if prev is not None and mag < prev:
            past_peak = True
        prev = mag
        if past_peak and mag <= policy.relative_term_cutoff * abs(acc.value):
            streak += 1
            if streak >= 3:
                return acc.value, abs_sum
        else:
            streak = 0
    raise NonConvergenceError(
        f"Wright series W({z!r}, {a!r}, {b!r}) did not converge in {policy.max_terms} terms"
    )


def _kanter(phi: float, nu: float) -> float:
    s_nu = math.sin(nu * phi)
    return (s_nu / math.sin(phi)) ** (1.0 / (1.0 - nu)) * math.sin((1.0 - nu) * phi) / s_nu


def _quad(func) -> float:
    value, _ = integrate.quad(func, 0.0, math.pi, epsabs=0.0, epsrel=1e-13, limit=200)
    return value


def _wright_b1_integral(x: float, nu: float, complement: bool = False) -> float:
    """``W(-x, -nu, 1)`` (or ``1 - W``) for ``x > 0`` from the stable-law CDF."""
    big = x ** (1.0 / (1.0 - nu))

    def integrand(phi: float) -> float:
        e = _kanter(phi, nu) * big
        if complement:
            return -math.expm1(-e)
        return math.exp(-e) if e < 745.0 else 0.0

    return _quad(integrand) / math.pi


def _mainardi_integral(x: float, nu: float) -> float:
    """``M_nu(x) = W(-x, -nu, 1 - nu)`` for ``x > 0`` from the stable-law density."""
    big = x ** (1.0 / (1.0 - nu))

    def integrand(phi: float) -> float:
        kv = _kanter(phi, nu)
        e = kv * big
        return kv * math.exp(-e) if e < 745.0 else 0.0

    return big / (math.pi * (1.0 - nu) * x) * _quad(integrand)


def _check_domain(z: float, policy: SeriesPolicy) -> None:
    if abs(z) > policy.domain_bound:
        raise DomainError(f"|z|={abs(z)!r} exceeds the supported bound {policy.domain_bound!r}")


def _well_conditioned(total: float, abs_sum: float) -> bool:
    return abs_sum * _EPS <= _SERIES_REL_BUDGET * abs(total)


def _same(u: float, v: float) -> bool:
    return abs(u - v) <= 4 * _EPS * max(1.0, abs(u))


def wright(z: float, a: float, b: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """Wright function ``W(z, a, b)`` for real ``z`` with ``|z| <= domain_bound``.

    Raises :class:`DomainError` outside the supported domain and
    :class:`NonConvergenceError` if the series budget is exhausted.
    """
    args = WrightArgs(z, a, b)
    _check_domain(args.z, policy)
    if args.z == 0.0:
        return reciprocal_gamma(args.b)
    integral = None
    if args.z < 0 and _same(args.b, 1.0):
        integral = _wright_b1_integral
    elif args.z < 0 and _same(args.b, 1.0 + args.a):
        integral = _mainardi_integral
    try:
        total, abs_sum = _series(args.z, args.a, args.b, policy)
    except NonConvergenceError:
        # orders a near -1 decay too slowly for the term budget
        if integral is None:
            raise
        return integral(-args.z, -args.a)
    if integral is None or _well_conditioned(total, abs_sum):
        return total
    return integral(-args.z, -args.a)


def wright_complement(x: float, nu: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """``1 - W(-x, -nu, 1)`` for ``x >= 0``, free of cancellation near ``x = 0``.

    Near zero the leading 1 is dropped analytically and the tail ``k >= 1``
    of the series is summed directly.
    """
    WrightArgs(-x, -nu, 1.0)
    if x < 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    _check_domain(x, policy)
    if x == 0.0:
        return 0.0
    try:
        tail, abs_sum = _series(-x, -nu, 1.0, policy, start=1)
    except NonConvergenceError:
        return _wright_b1_integral(x, nu, complement=True)
    if _well_conditioned(tail, abs_sum):
        return -tail
    return _wright_b1_integral(x, nu, complement=True)


def mainardi(x: float, nu: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """Mainardi function ``M_nu(x) = W(-x, -nu, 1 - nu)`` for ``x >= 0``."""
    if not 0.0 < nu < 1.0:
        raise DomainError(f"Mainardi order nu={nu!r} outside (0, 1)")
    if x < 0:
        raise DomainError(f"Mainardi argument must be non-negative, got {x!r}")
    return wright(-x, -nu, 1.0 - nu, policy)


def wright_derivative_check(
    z: float, a: float, b: float, h: float, policy: SeriesPolicy = DEFAULT_POLICY
) -> float:
    """Mismatch between a central difference of ``W(., a, b)`` and ``W(z, a, a + b)``.

    The identity ``d/dz W(z, a, b) = W(z, a, a + b)`` makes this an
    ``O(h**2)`` quantity.
    """
    central = (wright(z + h, a, b, policy) - wright(z - h, a, b, policy)) / (2.0 * h)
    return abs(central - wright(z, a, a + b, policy))


def caputo_power(p: float, alpha: float, t: float) -> float:
    """Caputo derivative of order ``alpha`` of ``t**p``:
    ``Gamma(p + 1) / Gamma(p - alpha + 1) * t**(p - alpha)``.
    """
    if not p > 0:
        raise DomainError(f"power p must be positive, got {p!r}")
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"order alpha={alpha!r} outside (0, 1]")
    if not t > 0:
        raise DomainError(f"time t must be positive, got {t!r}")
    return gamma(p + 1.0) * reciprocal_gamma(p - alpha + 1.0) * t ** (p - alpha)
