"""The classical problem (alpha = 1) and convergence of the fractional solutions to it.

The classical solver works only with erf and exp so that it can serve as an
independent target for the fractional path: nothing here calls the Wright
series.  With ``sigma* = sigma / 2`` the classical similarity variable
``xi*`` is half the limit of the fractional ``xi(alpha)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import DomainError, InadmissibleError, MissingCoefficientError, ProbeError, ResidualCheckError
from .inverse import solve_case
from .problem import COEFFICIENT_NAMES, CaseId, Coefficients, ProblemData
from .roots import RootProblem, solve_monotone
from .specfun import DEFAULT_POLICY, SeriesPolicy, erf

__all__ = [
    "ClassicalSolution",
    "ProbeRow",
    "ProbeTable",
    "solve_classical",
    "classical_residuals",
    "synthesize_classical_data",
    "fixed_family",
    "convergence_probe",
]

_SQRT_PI = math.sqrt(math.pi)
_LC_CASES = (CaseId.LC, CaseId.CRHO, CaseId.LRHO)


def _exp(x: float) -> float:
    return math.exp(x) if x < 709.0 else math.inf


def _erf_over_x(x: float) -> float:
    return erf(x) / x


def _exp_sq(x: float) -> float:
    return _exp(x * x)


def _x_erf(x: float) -> float:
    return x * erf(x)


def _x_erf_exp_sq(x: float) -> float:
    return x * erf(x) * _exp(x * x)


@dataclass(frozen=True)
class ClassicalSolution:
    case: CaseId
    sigma_star: float
    xi_star: float
    lam: float
    coefficients: Coefficients
    residual_eq1: float
    residual_eq2: float
    data: ProblemData

    def as_dict(self) -> dict:
        return {
            "case": int(self.case),
            "alpha": 1.0,
            "sigma_star": self.sigma_star,
            "xi_star": self.xi_star,
            "xi": 2.0 * self.xi_star,
            "lambda": self.lam,
            **self.coefficients.as_dict(),
            "recovered": list(self.coefficients.recovered),
            "residual_eq1": self.residual_eq1,
            "residual_eq2": self.residual_eq2,
        }


def _check_classical(case: CaseId, data: ProblemData) -> dict[str, float]:
    if data.alpha != 1.0:
        raise DomainError(f"classical problem needs alpha = 1, got {data.alpha!r}")
    known = data.known
    missing = [n for n in case.knowns if n not in known]
    if missing:
        raise MissingCoefficientError(f"case {int(case)} needs known {', '.join(missing)}")
    extra = [n for n in case.unknowns if n in known]
    if extra:
        raise ValueError(f"case {int(case)} determines {', '.join(extra)}; do not supply them")
    return known


def _equation(case: CaseId, data: ProblemData, known: dict[str, float], sigma_star: float) -> RootProblem:
    dT, q0 = data.dT, data.q_0
    if case in _LC_CASES:
        lhs = known["k"] * dT / (2.0 * sigma_star * q0)
        if not lhs < 1.0:
            raise InadmissibleError(
                "Cond-lc", lhs, f"Cond-lc: k(T0-Tm)/(2 sigma* q0) = {lhs!r} >= 1"
            )
        rhs = known["k"] * dT / (q0 * sigma_star * _SQRT_PI)
        return RootProblem(_erf_over_x, "decreasing", rhs, attainable=(0.0, 2.0 / _SQRT_PI))
    if case is CaseId.CK:
        ratio = q0 / (known["rho"] * known["l"] * sigma_star)
        if not ratio > 1.0:
            raise InadmissibleError(
                "Cond-ck", ratio, f"Cond-ck: q0/(rho l sigma*) = {ratio!r} <= 1"
            )
        return RootProblem(_exp_sq, "increasing", ratio, attainable=(1.0, math.inf))
    if case is CaseId.LK:
        rhs = known["rho"] * known["c"] * sigma_star * dT / (q0 * _SQRT_PI)
        return RootProblem(_x_erf, "increasing", rhs, attainable=(0.0, math.inf))
    rhs = known["c"] * dT / (known["l"] * _SQRT_PI)
    return RootProblem(_x_erf_exp_sq, "increasing", rhs, attainable=(0.0, math.inf))


def _classical_unknowns(case: CaseId, xs: float, ss: float, data: ProblemData, known: dict[str, float]) -> dict[str, float]:
    q0, dT = data.q_0, data.dT
    decay = math.exp(-xs * xs)
    if case is CaseId.LC:
        k, rho = known["k"], known["rho"]
        return {"c": k / rho * (xs / ss) ** 2, "l": q0 * decay / (rho * ss)}
    if case is CaseId.CK:
        rho = known["rho"]
        e = erf(xs)
        return {
            "c": q0 * _SQRT_PI * xs * e / (rho * ss * dT),
            "k": ss * q0 * _SQRT_PI * e / (dT * xs),
        }
    if case is CaseId.LK:
        rho, c = known["rho"], known["c"]
        return {"l": q0 * decay / (rho * ss), "k": rho * c * (ss / xs) ** 2}
    if case is CaseId.CRHO:
        k, l = known["k"], known["l"]
        # denominator q0 sigma*, as required by lambda = sigma*/xi*
        return {"c": k * l * xs * xs / (decay * q0 * ss), "rho": q0 * decay / (l * ss)}
    if case is CaseId.LRHO:
        k, c = known["k"], known["c"]
        return {"l": q0 * c * ss * decay / (k * xs * xs), "rho": k / c * (xs / ss) ** 2}
    c, l = known["c"], known["l"]
    return {"rho": q0 * decay / (l * ss), "k": q0 * c * ss * decay / (l * xs * xs)}


def _relative(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs))
    return 0.0 if scale == 0.0 else abs(lhs - rhs) / scale


def classical_residuals(xi_star: float, coeffs: Coefficients, data: ProblemData) -> tuple[float, float]:
    """Relative residuals of the alpha = 1 system in erf form.

    ``sqrt(pi) xi* erf(xi*) exp(xi*^2) = c (T0-Tm) / l`` and
    ``erf(xi*) = sqrt(k rho c) (T0-Tm) / (sqrt(pi) q0)``.
    """
    e = erf(xi_star)
    r1 = _relative(_SQRT_PI * xi_star * e * _exp(xi_star**2), coeffs.c * data.dT / coeffs.l)
    r2 = _relative(e, math.sqrt(coeffs.k * coeffs.rho * coeffs.c) * data.dT / (_SQRT_PI * data.q_0))
    return r1, r2


def solve_classical(case: CaseId, data: ProblemData, residual_tol: float = 1e-10) -> ClassicalSolution:
    """Two-coefficient determination for the classical problem (``data.alpha == 1``)."""
    case = CaseId(case)
    known = _check_classical(case, data)
    sigma_star = data.sigma / 2.0
    problem = _equation(case, data, known, sigma_star)
    xi_star = solve_monotone(problem)

    values = dict(known)
    values.update(_classical_unknowns(case, xi_star, sigma_star, data, known))
    coeffs = Coefficients(**{n: values[n] for n in COEFFICIENT_NAMES}, recovered=case.unknowns)
    lam = coeffs.diffusivity
    if _relative(xi_star * lam, sigma_star) > residual_tol:
        raise ResidualCheckError(f"xi* lambda = {xi_star * lam!r} does not reproduce sigma* = {sigma_star!r}")
    r1, r2 = classical_residuals(xi_star, coeffs, data)
    if r1 > residual_tol or r2 > residual_tol:
        raise ResidualCheckError(f"classical residuals ({r1!r}, {r2!r}) exceed {residual_tol}")
    return ClassicalSolution(
        case=case,
        sigma_star=sigma_star,
        xi_star=xi_star,
        lam=lam,
        coefficients=coeffs,
        residual_eq1=r1,
        residual_eq2=r2,
        data=data,
    )


def synthesize_classical_data(
    k: float, rho: float, c: float, l: float, *, T_m: float = 0.0, T_0: float = 1.0
) -> ProblemData:
    """Classical data consistent with the given coefficients (all four kept)."""
    dT = T_0 - T_m
    xs = solve_monotone(RootProblem(_x_erf_exp_sq, "increasing", c * dT / (l * _SQRT_PI)))
    lam = math.sqrt(k / (rho * c))
    sigma = 2.0 * xs * lam
    q_0 = math.sqrt(k * rho * c) * dT / (_SQRT_PI * erf(xs))
    return ProblemData(alpha=1.0, T_m=T_m, T_0=T_0, q_0=q_0, sigma=sigma, k=k, rho=rho, c=c, l=l)


def fixed_family(data: ProblemData, mu: Callable[[float], float] | None = None,
                 nu: Callable[[float], float] | None = None) -> Callable[[float], ProblemData]:
    """Hold every datum fixed and vary only ``alpha`` (``mu``, ``nu`` default to 1)."""

    def family(alpha: float) -> ProblemData:
        return data.replace(
            alpha=alpha,
            mu=1.0 if mu is None or alpha == 1.0 else mu(alpha),
            nu=1.0 if nu is None or alpha == 1.0 else nu(alpha),
        )

    return family


@dataclass(frozen=True)
class ProbeRow:
    alpha: float
    xi: float
    xi_deviation: float
    xi_relative_deviation: float
    coefficient_deviations: dict[str, float]

    @property
    def worst(self) -> float:
        return max([self.xi_relative_deviation, *self.coefficient_deviations.values()])


@dataclass(frozen=True)
class ProbeTable:
    case: CaseId
    classical: ClassicalSolution
    rows: list[ProbeRow] = field(default_factory=list)
    tolerance: float | None = None

    @property
    def xi_target(self) -> float:
        return 2.0 * self.classical.xi_star

    @property
    def monotone_decrease(self) -> bool:
        devs = [r.xi_deviation for r in self.rows]
        return all(b < a for a, b in zip(devs, devs[1:]))

    @property
    def passed(self) -> bool | None:
        if self.tolerance is None or not self.rows:
            return None
        return self.rows[-1].worst <= self.tolerance


def convergence_probe(
    case: CaseId,
    data_family: Callable[[float], ProblemData],
    alphas: Iterable[float],
    tolerance: float | None = None,
    policy: SeriesPolicy = DEFAULT_POLICY,
) -> ProbeTable:
    """Tabulate ``xi(alpha)`` and the recovered pair against the classical solution.

    ``data_family(1.0)`` defines the classical target.  Deviations of the
    coefficients are relative; the ``xi`` deviation is reported both absolute
    and relative to ``2 xi*``.  Any per-alpha failure raises
    :class:`ProbeError` naming the offending ``alpha``.
    """
    case = CaseId(case)
    classical = solve_classical(case, data_family(1.0).for_case(case))
    target = 2.0 * classical.xi_star
    rows = []
    for alpha in alphas:
        try:
            report = solve_case(case, data_family(alpha).for_case(case), policy)
        except Exception as exc:
            raise ProbeError(alpha, exc) from exc
        devs = {
            name: abs(getattr(report.coefficients, name) - getattr(classical.coefficients, name))
            / abs(getattr(classical.coefficients, name))
            for name in case.unknowns
        }
        dev = abs(report.xi - target)
        rows.append(ProbeRow(alpha, report.xi, dev, dev / target, devs))
    return ProbeTable(case, classical, rows, tolerance)
