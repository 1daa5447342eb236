"""Determination of two thermal coefficients from an inverse one-phase
fractional Stefan problem with a similarity-type solution."""

from .classical import ClassicalSolution, convergence_probe, fixed_family, solve_classical, synthesize_classical_data
from .errors import (
    BracketError,
    DomainBoundExceeded,
    DomainError,
    FracStefanError,
    InadmissibleError,
    MissingCoefficientError,
    NonConvergenceError,
    ProbeError,
    RangeError,
    ResidualCheckError,
)
from .field import moving_boundary, pde_residual, similarity, temperature, verify_conditions
from .inverse import SolveReport, admissibility, solve_case, synthesize_data, system_residuals
from .problem import CaseId, Coefficients, ProblemData
from .profiles import ProfileKind, f_alpha, profile_eval, profile_range
from .roots import RootProblem, solve_monotone
from .specfun import SeriesPolicy, caputo_power, erf, gamma, mainardi, reciprocal_gamma, wright

__version__ = "0.1.0"
