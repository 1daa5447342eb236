"""Determination of two unknown thermal coefficients for 0 < alpha < 1.

Every case reduces to one strictly monotone scalar equation for the
similarity variable ``xi = sigma / (sqrt(mu) lambda)`` followed by closed
forms for the two unknowns:

====  =========  ===================  ===========
case  unknowns   xi equation          condition
====  =========  ===================  ===========
1     l, c       F(xi) = ...          Cond-lc
2     c, k       M(xi) = ...          Cond-ck
3     l, k       G(xi) = ...          none
4     c, rho     F(xi) = ...          Cond-lc
5     l, rho     F(xi) = ...          Cond-lc
6     rho, k     H(xi) = ...          none
====  =========  ===================  ===========

Each solve is verified against both equations of the characterizing system;
failure raises rather than warns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DomainBoundExceeded,
    DomainError,
    InadmissibleError,
    MissingCoefficientError,
    ResidualCheckError,
)
from .problem import COEFFICIENT_NAMES, CaseId, Coefficients, ProblemData
from .profiles import ProfileKind, f_alpha, profile_direction, profile_eval, profile_range
from .roots import RootProblem, solve_monotone
from .specfun import DEFAULT_POLICY, SeriesPolicy, gamma, mainardi

__all__ = [
    "Verdict",
    "SolveReport",
    "admissibility",
    "solve_case",
    "system_residuals",
    "xi_equation",
    "synthesize_data",
    "RESIDUAL_TOL",
]

RESIDUAL_TOL = 1e-8
XI_CONSISTENCY_TOL = 1e-10

_LC_CASES = (CaseId.LC, CaseId.CRHO, CaseId.LRHO)


@dataclass(frozen=True)
class Verdict:
    admissible: bool
    condition: str | None = None
    value: float | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.admissible


@dataclass(frozen=True)
class SolveReport:
    case: CaseId
    xi: float
    lam: float
    coefficients: Coefficients
    residual_eq1: float
    residual_eq2: float
    admissible: bool
    reason: str
    data: ProblemData

    def as_dict(self) -> dict:
        return {
            "case": int(self.case),
            "alpha": self.data.alpha,
            "xi": self.xi,
            "lambda": self.lam,
            **self.coefficients.as_dict(),
            "recovered": list(self.coefficients.recovered),
            "residual_eq1": self.residual_eq1,
            "residual_eq2": self.residual_eq2,
            "admissible": self.admissible,
            "reason": self.reason,
        }


def _gammas(alpha: float) -> tuple[float, float]:
    """``(Gamma(1 - alpha/2), Gamma(1 + alpha/2))``."""
    return gamma(1.0 - alpha / 2.0), gamma(1.0 + alpha / 2.0)


def _require(case: CaseId, data: ProblemData) -> dict[str, float]:
    known = data.known
    missing = [n for n in case.knowns if n not in known]
    if missing:
        raise MissingCoefficientError(f"case {int(case)} needs known {', '.join(missing)}")
    return known


def admissibility(case: CaseId, data: ProblemData) -> Verdict:
    """Evaluate the strict data inequality of ``case``; equality is inadmissible."""
    case = CaseId(case)
    known = _require(case, data)
    if case in _LC_CASES:
        value = known["k"] * data.dT / (data.sigma * data.q_0)
        if value < 1.0:
            return Verdict(True, "Cond-lc", value, f"Cond-lc: k(T0-Tm)/(sigma q0) = {value!r} < 1")
        return Verdict(False, "Cond-lc", value, f"Cond-lc: k(T0-Tm)/(sigma q0) = {value!r} >= 1")
    if case is CaseId.CK:
        g_minus, g_plus = _gammas(data.alpha)
        value = data.nu * data.sigma * known["rho"] * known["l"] * g_plus / (data.q_0 * g_minus)
        if value < 1.0:
            return Verdict(True, "Cond-ck", value, f"Cond-ck: nu sigma rho l G(1+a/2)/(q0 G(1-a/2)) = {value!r} < 1")
        return Verdict(False, "Cond-ck", value, f"Cond-ck: nu sigma rho l G(1+a/2)/(q0 G(1-a/2)) = {value!r} >= 1")
    return Verdict(True, None, None, "no data condition")


def xi_equation(case: CaseId, data: ProblemData) -> tuple[ProfileKind, float]:
    """Profile kind and right-hand side of the scalar equation for ``xi``."""
    case = CaseId(case)
    known = _require(case, data)
    g_minus, g_plus = _gammas(data.alpha)
    if case in _LC_CASES:
        return ProfileKind.F, known["k"] * data.dT / (data.sigma * data.q_0 * g_minus)
    if case is CaseId.CK:
        rhs = data.nu * data.sigma * known["rho"] * known["l"] * g_plus / (data.q_0 * g_minus**2)
        return ProfileKind.M, rhs
    if case is CaseId.LK:
        return ProfileKind.G, data.sigma * known["rho"] * known["c"] * data.dT / (data.mu * data.q_0 * g_minus)
    return ProfileKind.H, known["c"] * data.dT * g_minus / (data.mu * data.nu * known["l"] * g_plus)


def _solve_xi(kind: ProfileKind, rhs: float, alpha: float, policy: SeriesPolicy) -> float:
    bound = policy.domain_bound
    direction = profile_direction(kind)
    at_bound = profile_eval(kind, bound, alpha, policy)
    beyond = rhs <= at_bound if direction == "decreasing" else rhs >= at_bound
    lower, upper = profile_range(kind, alpha)
    if beyond and lower < rhs < upper:
        raise DomainBoundExceeded(
            f"xi equation {kind.value}(x) = {rhs!r} has its root beyond the supported bound x = {bound!r}"
        )
    problem = RootProblem(
        func=lambda x: profile_eval(kind, x, alpha, policy),
        direction=direction,
        target=rhs,
        attainable=(lower, upper),
        upper=bound,
    )
    return solve_monotone(problem)


def _unknowns(case: CaseId, xi: float, data: ProblemData, policy: SeriesPolicy) -> dict[str, float]:
    known = data.known
    alpha, mu, nu, q0, sigma, dT = data.alpha, data.mu, data.nu, data.q_0, data.sigma, data.dT
    g_minus, g_plus = _gammas(alpha)
    f = f_alpha(xi, alpha, policy)
    m = mainardi(xi, alpha / 2.0, policy)
    # q0 sqrt(mu) Gamma(1-a/2) f(xi) / (T0-Tm) squared equals k rho c
    flux_sq = (q0 * math.sqrt(mu) * g_minus * f / dT) ** 2
    # q0^2 Gamma^3(1-a/2) f M / (nu (T0-Tm) Gamma(1+a/2) xi) equals rho k l
    stefan = q0**2 * g_minus**3 * f * m / (nu * dT * g_plus * xi)
    # c / l from the Stefan balance
    c_over_l = mu * nu * g_plus * xi * f / (dT * g_minus * m)

    if case is CaseId.LC:
        k, rho = known["k"], known["rho"]
        return {"c": flux_sq / (rho * k), "l": stefan / (rho * k)}
    if case is CaseId.CK:
        rho, l = known["rho"], known["l"]
        return {"c": l * c_over_l, "k": stefan / (rho * l)}
    if case is CaseId.LK:
        rho, c = known["rho"], known["c"]
        return {"k": flux_sq / (rho * c), "l": c / c_over_l}
    if case is CaseId.CRHO:
        k, l = known["k"], known["l"]
        return {"c": l * c_over_l, "rho": stefan / (k * l)}
    if case is CaseId.LRHO:
        k, c = known["k"], known["c"]
        return {"l": c / c_over_l, "rho": flux_sq / (k * c)}
    c = known["c"]
    return {
        "rho": q0 * mu * g_minus * xi * f / (sigma * c * dT),
        "k": sigma * q0 * g_minus * f / (dT * xi),
    }


def _relative(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs))
    return 0.0 if scale == 0.0 else abs(lhs - rhs) / scale


def system_residuals(
    xi: float, coeffs: Coefficients, data: ProblemData, policy: SeriesPolicy = DEFAULT_POLICY
) -> tuple[float, float]:
    """Relative residuals of the two equations characterizing a similarity solution.

    The first is the Stefan balance ``xi f(xi) / M(xi) = c (T0-Tm) G(1-a/2) / (mu nu l G(1+a/2))``,
    the second the flux balance ``f(xi) = sqrt(k rho c) (T0-Tm) / (sqrt(mu) q0 G(1-a/2))``.
    """
    alpha = data.alpha
    g_minus, g_plus = _gammas(alpha)
    f = f_alpha(xi, alpha, policy)
    m = mainardi(xi, alpha / 2.0, policy)
    lhs1 = xi * f / m
    rhs1 = coeffs.c * data.dT * g_minus / (data.mu * data.nu * coeffs.l * g_plus)
    lhs2 = f
    rhs2 = math.sqrt(coeffs.k * coeffs.rho * coeffs.c) * data.dT / (math.sqrt(data.mu) * data.q_0 * g_minus)
    return _relative(lhs1, rhs1), _relative(lhs2, rhs2)


def solve_case(case: CaseId, data: ProblemData, policy: SeriesPolicy = DEFAULT_POLICY) -> SolveReport:
    """Recover the two unknown coefficients of ``case`` from ``data``.

    Raises :class:`InadmissibleError` when the case condition fails,
    :class:`DomainBoundExceeded` when ``xi`` would leave the supported Wright
    domain and :class:`ResidualCheckError` if the recovered solution does not
    satisfy the characterizing system.
    """
    case = CaseId(case)
    if data.alpha >= 1.0:
        raise DomainError("alpha = 1 is the classical problem; use fracstefan.classical.solve_classical")
    known = _require(case, data)
    extra = [n for n in case.unknowns if n in known]
    if extra:
        raise ValueError(f"case {int(case)} determines {', '.join(extra)}; do not supply them")

    verdict = admissibility(case, data)
    if not verdict:
        raise InadmissibleError(verdict.condition or "", verdict.value or math.nan, verdict.reason)

    kind, rhs = xi_equation(case, data)
    xi = _solve_xi(kind, rhs, data.alpha, policy)

    values = dict(known)
    values.update(_unknowns(case, xi, data, policy))
    for name in case.unknowns:
        if not (math.isfinite(values[name]) and values[name] > 0):
            raise ResidualCheckError(f"recovered {name}={values[name]!r} is not a positive number")
    coeffs = Coefficients(**{n: values[n] for n in COEFFICIENT_NAMES}, recovered=case.unknowns)

    lam = coeffs.diffusivity
    if _relative(xi * math.sqrt(data.mu) * lam, data.sigma) > XI_CONSISTENCY_TOL:
        raise ResidualCheckError(
            f"xi sqrt(mu) lambda = {xi * math.sqrt(data.mu) * lam!r} does not reproduce sigma = {data.sigma!r}"
        )
    r1, r2 = system_residuals(xi, coeffs, data, policy)
    if r1 > RESIDUAL_TOL or r2 > RESIDUAL_TOL:
        raise ResidualCheckError(f"system residuals ({r1!r}, {r2!r}) exceed {RESIDUAL_TOL}")

    return SolveReport(
        case=case,
        xi=xi,
        lam=lam,
        coefficients=coeffs,
        residual_eq1=r1,
        residual_eq2=r2,
        admissible=True,
        reason=verdict.reason,
        data=data,
    )


def synthesize_data(
    k: float,
    rho: float,
    c: float,
    l: float,
    alpha: float,
    *,
    mu: float = 1.0,
    nu: float = 1.0,
    T_m: float = 0.0,
    T_0: float = 1.0,
    policy: SeriesPolicy = DEFAULT_POLICY,
) -> ProblemData:
    """Problem data consistent with the given coefficients at order ``alpha``.

    The Stefan balance fixes ``xi`` (it is the H-equation of case 6), then
    ``sigma = xi sqrt(mu) lambda`` and the flux balance fixes ``q_0``.  The
    returned data carry all four coefficients; hide the pair to recover.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha={alpha!r} outside (0, 1)")
    g_minus, g_plus = _gammas(alpha)
    dT = T_0 - T_m
    rhs = c * dT * g_minus / (mu * nu * l * g_plus)
    xi = _solve_xi(ProfileKind.H, rhs, alpha, policy)
    lam = math.sqrt(k / (rho * c))
    sigma = xi * math.sqrt(mu) * lam
    q_0 = math.sqrt(k * rho * c) * dT / (math.sqrt(mu) * g_minus * f_alpha(xi, alpha, policy))
    return ProblemData(
        alpha=alpha, T_m=T_m, T_0=T_0, q_0=q_0, sigma=sigma, mu=mu, nu=nu, k=k, rho=rho, c=c, l=l
    )
