"""Temperature field, free boundary and numerical checks of the governing equations.

The similarity temperature is

    T(x, t) = T_0 - (T_0 - T_m) / f(xi) * f(x / (sqrt(mu) lambda t**(alpha/2)))

with ``f(x) = 1 - W(-x, -alpha/2, 1)`` for the fractional problem and
``f(x) = erf(x / 2)`` for the classical one.  Its ``x``-derivative follows
from ``f' = M_{alpha/2}`` (respectively ``exp(-x**2/4)/sqrt(pi)``), so the
boundary checks carry no discretization error.  Only :func:`pde_residual`
discretizes, on purpose: it applies the L1 quadrature to the Caputo
derivative in time and a central difference in space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .classical import ClassicalSolution
from .errors import DomainError
from .inverse import SolveReport
from .profiles import f_alpha
from .specfun import DEFAULT_POLICY, SeriesPolicy, caputo_power, erf, gamma, mainardi

__all__ = [
    "SimilaritySolution",
    "FieldSpec",
    "ConditionReport",
    "similarity",
    "moving_boundary",
    "temperature",
    "temperature_gradient",
    "temperature_grid",
    "verify_conditions",
    "pde_residual",
]

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class SimilaritySolution:
    """Everything the closed-form temperature needs.

    ``closed_form`` selects the erf profile (classical problem); otherwise
    the Wright profile is used, which is also valid at ``alpha = 1``.
    """

    alpha: float
    mu: float
    nu: float
    lam: float
    xi: float
    sigma: float
    T_0: float
    T_m: float
    q_0: float
    k: float
    rho: float
    l: float
    closed_form: bool = False

    @property
    def A(self) -> float:
        return self.T_0

    def profile(self, eta: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
        if self.closed_form:
            return erf(eta / 2.0)
        if eta == 0.0:
            return 0.0
        return f_alpha(eta, self.alpha, policy)

    def profile_slope(self, eta: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
        if self.closed_form:
            return math.exp(-eta * eta / 4.0) / _SQRT_PI
        return mainardi(eta, self.alpha / 2.0, policy)

    def B(self, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
        return (self.T_m - self.T_0) / self.profile(self.xi, policy)

    def scale(self, t: float) -> float:
        """``sqrt(mu) lambda t**(alpha/2)``, the length that ``x`` is measured in."""
        return math.sqrt(self.mu) * self.lam * t ** (self.alpha / 2.0)


Solution = Union[SolveReport, ClassicalSolution, SimilaritySolution]


def similarity(solution: Solution) -> SimilaritySolution:
    if isinstance(solution, SimilaritySolution):
        return solution
    data = solution.data
    co = solution.coefficients
    common = dict(sigma=data.sigma, T_0=data.T_0, T_m=data.T_m, q_0=data.q_0, k=co.k, rho=co.rho, l=co.l, lam=solution.lam)
    if isinstance(solution, ClassicalSolution):
        return SimilaritySolution(alpha=1.0, mu=1.0, nu=1.0, xi=2.0 * solution.xi_star, closed_form=True, **common)
    return SimilaritySolution(alpha=data.alpha, mu=data.mu, nu=data.nu, xi=solution.xi, **common)


def moving_boundary(t: float, sigma: float, alpha: float) -> float:
    """Free-boundary position ``s(t) = sigma t**(alpha/2)``."""
    if not t > 0:
        raise DomainError(f"time must be positive, got {t!r}")
    return sigma * t ** (alpha / 2.0)


def temperature(x: float, t: float, solution: Solution, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """Temperature at ``(x, t)``; also evaluated past ``s(t)`` as the entire-function extension."""
    sol = similarity(solution)
    if x < 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    if not t > 0:
        raise DomainError(f"time must be positive, got {t!r}")
    eta = x / sol.scale(t)
    return sol.T_0 + sol.B(policy) * sol.profile(eta, policy)


def temperature_gradient(x: float, t: float, solution: Solution, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """``T_x(x, t)`` in closed form."""
    sol = similarity(solution)
    scale = sol.scale(t)
    return sol.B(policy) * sol.profile_slope(x / scale, policy) / scale


@dataclass(frozen=True)
class FieldSpec:
    solution: Solution
    x_grid: Sequence[float]
    t_grid: Sequence[float]

    def __post_init__(self) -> None:
        for name in ("x_grid", "t_grid"):
            grid = np.asarray(getattr(self, name), dtype=float)
            if grid.size == 0:
                raise ValueError(f"{name} is empty")
            if np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
                raise ValueError(f"{name} must be strictly ascending and positive")


def temperature_grid(spec: FieldSpec, policy: SeriesPolicy = DEFAULT_POLICY) -> list[tuple[float, float, float]]:
    """``(x, t, T)`` rows, row-major over ``t`` then ``x``."""
    return [
        (float(x), float(t), temperature(float(x), float(t), spec.solution, policy))
        for t in spec.t_grid
        for x in spec.x_grid
    ]


@dataclass(frozen=True)
class ConditionReport:
    t: list[float]
    flux: list[float]
    stefan: list[float]
    front: list[float]

    @property
    def max_flux(self) -> float:
        return max(self.flux)

    @property
    def max_stefan(self) -> float:
        return max(self.stefan)

    @property
    def max_front(self) -> float:
        return max(self.front)

    @property
    def stefan_spread(self) -> float:
        return max(self.stefan) - min(self.stefan)


def _relative(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs))
    return 0.0 if scale == 0.0 else abs(lhs - rhs) / scale


def verify_conditions(
    solution: Solution, t_samples: Sequence[float], policy: SeriesPolicy = DEFAULT_POLICY
) -> ConditionReport:
    """Residuals of the fixed-face flux, the Stefan condition and the melt temperature.

    Flux and Stefan residuals are relative; the front residual is
    ``|T(s(t), t) - T_m|``.
    """
    sol = similarity(solution)
    flux, stefan, front = [], [], []
    for t in t_samples:
        s = moving_boundary(t, sol.sigma, sol.alpha)
        flux.append(_relative(sol.k * temperature_gradient(0.0, t, sol, policy), -sol.q_0 * t ** (-sol.alpha / 2.0)))
        heat_in = -sol.k * temperature_gradient(s, t, sol, policy)
        melt = sol.nu * sol.rho * sol.l * sol.sigma * caputo_power(sol.alpha / 2.0, sol.alpha, t)
        stefan.append(_relative(heat_in, melt))
        front.append(abs(temperature(s, t, sol, policy) - sol.T_m))
    return ConditionReport(list(t_samples), flux, stefan, front)


def _l1_weights(n: int, alpha: float) -> np.ndarray:
    m = np.arange(n, dtype=float)
    w = (m + 1.0) ** (1.0 - alpha) - m ** (1.0 - alpha)
    w[0] = 1.0  # numpy takes 0**0 = 1, which would zero it at alpha = 1
    return w


def pde_residual(
    solution: Solution,
    x: float,
    t: float,
    n_steps: int,
    policy: SeriesPolicy = DEFAULT_POLICY,
    dx: float | None = None,
) -> float:
    """Normalized mismatch ``|D^alpha_t T - mu lambda^2 T_xx|`` at ``(x, t)``.

    The Caputo derivative uses the L1 scheme on ``n_steps`` uniform steps of
    ``[0, t]`` (error order ``2 - alpha``); ``T(x, 0)`` is the limit of the
    profile at infinity, ``f -> 1``.  ``T_xx`` is a central difference with
    step ``dx`` (default ``1e-4 x``).  The result is divided by the larger
    magnitude of the two sides.
    """
    sol = similarity(solution)
    if n_steps < 64:
        raise ValueError(f"n_steps must be at least 64, got {n_steps!r}")
    if not (x > 0 and t > 0):
        raise DomainError("pde_residual needs x > 0 and t > 0")
    alpha = sol.alpha
    dtau = t / n_steps
    weights = _l1_weights(n_steps, alpha)
    # weights[m] multiplies the increment over [tau_{n-1-m}, tau_{n-m}]
    active = int(np.count_nonzero(weights))
    first = n_steps - active
    b = sol.B(policy)
    values = np.empty(active + 1)
    for i, j in enumerate(range(first, n_steps + 1)):
        if j == 0:
            values[i] = sol.T_0 + b
        else:
            values[i] = temperature(x, j * dtau, sol, policy)
    increments = np.diff(values)[::-1]
    caputo = float(np.dot(weights[:active], increments)) / (gamma(2.0 - alpha) * dtau**alpha)

    h = 1e-4 * x if dx is None else dx
    t_xx = (temperature(x + h, t, sol, policy) - 2.0 * temperature(x, t, sol, policy) + temperature(x - h, t, sol, policy)) / h**2
    diffusion = sol.mu * sol.lam**2 * t_xx
    return _relative(caputo, diffusion)
