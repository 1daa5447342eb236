from __future__ import annotations

import dataclasses
import math

import numpy as np
import pytest

from fracstefan.classical import solve_classical, synthesize_classical_data
from fracstefan.errors import DomainError
from fracstefan.field import (
    FieldSpec,
    moving_boundary,
    pde_residual,
    similarity,
    temperature,
    temperature_gradient,
    temperature_grid,
    verify_conditions,
)
from fracstefan.inverse import solve_case, synthesize_data
from fracstefan.problem import CaseId
from fracstefan.specfun import caputo_power, erf, gamma

TRUTH = {"k": 1.5, "rho": 0.8, "c": 2.0, "l": 1.2}
T_SAMPLES = [0.5, 1.0, 2.0, 10.0]


@pytest.fixture(scope="module")
def reports():
    full = synthesize_data(**TRUTH, alpha=0.5)
    return {case: solve_case(case, full.for_case(case)) for case in CaseId}


@pytest.fixture(scope="module")
def classical():
    data = synthesize_classical_data(**TRUTH)
    return solve_classical(CaseId.LC, data.for_case(CaseId.LC))


def test_moving_boundary():
    assert moving_boundary(1.0, 1.7, 0.5) == 1.7
    assert moving_boundary(4.0, 1.7, 1.0) == pytest.approx(3.4)
    ts = np.linspace(0.1, 5, 50)
    s = [moving_boundary(t, 1.0, 0.3) for t in ts]
    assert all(b > a for a, b in zip(s, s[1:]))
    with pytest.raises(DomainError):
        moving_boundary(0.0, 1.0, 0.5)


def test_caputo_of_front():
    # D^a s at a = 0.5, t = 1, sigma = 1
    assert caputo_power(0.25, 0.5, 1.0) == pytest.approx(gamma(1.25) / gamma(0.75), rel=1e-15)
    assert caputo_power(0.25, 0.5, 1.0) == pytest.approx(0.7396687797971597, rel=1e-12)


@pytest.mark.parametrize("case", list(CaseId))
def test_conditions_hold(reports, case):
    rep = verify_conditions(reports[case], T_SAMPLES)
    assert rep.max_front <= 1e-9
    assert rep.max_flux <= 1e-8
    assert rep.max_stefan <= 1e-8
    assert rep.stefan_spread <= 1e-12


def test_classical_conditions(classical):
    rep = verify_conditions(classical, T_SAMPLES)
    assert rep.max_front <= 1e-9 and rep.max_flux <= 1e-9 and rep.max_stefan <= 1e-9
    # -k T_x(s) = rho l sigma / (2 sqrt t)
    sol = similarity(classical)
    for t in T_SAMPLES:
        s = moving_boundary(t, sol.sigma, 1.0)
        heat = -sol.k * temperature_gradient(s, t, classical)
        assert heat == pytest.approx(sol.rho * sol.l * sol.sigma / (2 * math.sqrt(t)), rel=1e-9)


def test_endpoints(reports):
    rep = reports[CaseId.LC]
    sol = similarity(rep)
    for t in T_SAMPLES:
        assert temperature(0.0, t, rep) == sol.T_0
        assert temperature(1e-12, t, rep) == pytest.approx(sol.T_0, abs=1e-11)
        s = moving_boundary(t, sol.sigma, sol.alpha)
        assert temperature(s, t, rep) == pytest.approx(sol.T_m, abs=1e-9)


def test_wright_path_at_alpha_one_matches_erf_form(classical):
    closed = similarity(classical)
    wright_path = dataclasses.replace(closed, closed_form=False)
    sigma_star = closed.sigma / 2
    for t in (0.5, 1.0, 3.0):
        x = sigma_star * math.sqrt(t)
        xi_star = sigma_star / closed.lam
        classic = closed.T_0 - (closed.T_0 - closed.T_m) * erf(x / (2 * closed.lam * math.sqrt(t))) / erf(xi_star)
        assert temperature(x, t, wright_path) == pytest.approx(classic, abs=1e-9)
        assert temperature(x, t, closed) == pytest.approx(classic, abs=1e-12)


@pytest.mark.parametrize("case", [CaseId.LC, CaseId.RHOK])
def test_monotone_and_bounded(reports, case):
    rep = reports[case]
    sol = similarity(rep)
    for t in (0.5, 2.0):
        s = moving_boundary(t, sol.sigma, sol.alpha)
        xs = np.linspace(0, s, 102)[1:-1]
        T = [temperature(float(x), t, rep) for x in xs]
        assert all(b < a for a, b in zip(T, T[1:]))
        assert all(sol.T_m < v < sol.T_0 for v in T)


@pytest.mark.parametrize("c", [0.5, 2.0])
def test_self_similarity(reports, c):
    rep = reports[CaseId.LK]
    a = rep.data.alpha
    for x, t in ((0.3, 1.0), (0.8, 2.0)):
        assert temperature(c * x, c ** (2 / a) * t, rep) == pytest.approx(temperature(x, t, rep), abs=1e-12)


def test_grid_layout(reports):
    spec = FieldSpec(reports[CaseId.LC], [0.1, 0.2, 0.3], [1.0, 2.0])
    rows = temperature_grid(spec)
    assert [(x, t) for x, t, _ in rows] == [(0.1, 1.0), (0.2, 1.0), (0.3, 1.0), (0.1, 2.0), (0.2, 2.0), (0.3, 2.0)]


@pytest.mark.parametrize("grids", [([], [1.0]), ([0.1], [2.0, 1.0]), ([0.0, 0.1], [1.0]), ([0.1, 0.1], [1.0])])
def test_grid_validation(reports, grids):
    with pytest.raises(ValueError):
        FieldSpec(reports[CaseId.LC], *grids)


def test_domain_errors(reports):
    rep = reports[CaseId.LC]
    with pytest.raises(DomainError):
        temperature(-0.1, 1.0, rep)
    with pytest.raises(DomainError):
        temperature(0.1, 0.0, rep)
    with pytest.raises(DomainError):
        temperature(100.0, 1.0, rep)


def test_pde_residual_order(reports):
    rep = reports[CaseId.LC]
    sol = similarity(rep)
    x = 0.25 * sol.scale(1.0)
    res = [pde_residual(rep, x, 1.0, n) for n in (256, 512, 1024)]
    orders = [math.log2(a / b) for a, b in zip(res, res[1:])]
    assert res[0] > res[1] > res[2]
    for p in orders:
        assert abs(p - 1.5) <= 0.3


def test_pde_residual_classical(classical):
    sol = similarity(classical)
    x = 0.5 * sol.scale(1.0)
    assert pde_residual(classical, x, 1.0, 2**20) <= 1e-6


def test_pde_residual_coarse_is_finite(reports):
    rep = reports[CaseId.CK]
    r = pde_residual(rep, 0.05, 1.0, 64)
    assert math.isfinite(r) and r >= 0


def test_pde_residual_rejects_tiny_grid(reports):
    with pytest.raises(ValueError):
        pde_residual(reports[CaseId.LC], 0.1, 1.0, 16)
