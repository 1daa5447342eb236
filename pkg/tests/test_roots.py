from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracstefan.errors import BracketError, RangeError
from fracstefan.roots import RootProblem, residual_ok, solve_monotone
from fracstefan.specfun import erf

from oracles import bisect
import mpmath as mp

# bisection at 60 digits
X_ERF_ONE = 1.1254518899486452
ERF_OVER_X_HALF = 1.9902328376288838


def test_x_erf_equals_one():
    assert bisect(lambda x: x * mp.erf(x), 0, 5, 1) == pytest.approx(X_ERF_ONE, rel=1e-15)
    root = solve_monotone(RootProblem(lambda x: x * erf(x), "increasing", 1.0))
    assert root == pytest.approx(X_ERF_ONE, rel=1e-12)


def test_exp_square_equals_two():
    root = solve_monotone(RootProblem(lambda x: math.exp(x * x), "increasing", 2.0))
    assert root == pytest.approx(math.sqrt(math.log(2.0)), rel=1e-12)
    assert root == pytest.approx(0.8325546111576978, rel=1e-12)


def test_erf_over_x_half():
    problem = RootProblem(lambda x: erf(x) / x, "decreasing", 0.5, attainable=(0.0, 2 / math.sqrt(math.pi)))
    root = solve_monotone(problem)
    assert root == pytest.approx(ERF_OVER_X_HALF, rel=1e-12)
    assert residual_ok(problem, root)


def test_target_outside_range():
    problem = RootProblem(lambda x: erf(x) / x, "decreasing", 1.2, attainable=(0.0, 2 / math.sqrt(math.pi)))
    with pytest.raises(RangeError):
        solve_monotone(problem)


def test_bracket_failure():
    # bounded function never reaches the target
    with pytest.raises(BracketError):
        solve_monotone(RootProblem(lambda x: math.atan(x), "increasing", 2.0))
    with pytest.raises(BracketError):
        solve_monotone(RootProblem(lambda x: x, "increasing", 10.0, upper=8.0))


def test_invalid_problem():
    with pytest.raises(ValueError):
        RootProblem(lambda x: x, "sideways", 1.0)
    with pytest.raises(ValueError):
        RootProblem(lambda x: x, "increasing", 1.0, tolerance=0.0)


def test_small_root_by_halving():
    root = solve_monotone(RootProblem(lambda x: x**3, "increasing", 1e-30))
    assert root == pytest.approx(1e-10, rel=1e-11)


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=1e-6, max_value=1e6))
def test_residual_within_tolerance(target):
    problem = RootProblem(lambda x: x * erf(x), "increasing", target)
    root = solve_monotone(problem)
    assert residual_ok(problem, root)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=1e-3, max_value=1.128))
def test_deterministic(target):
    problem = RootProblem(lambda x: erf(x) / x, "decreasing", target)
    assert solve_monotone(problem) == solve_monotone(problem)


def test_profile_targets_never_fail_to_bracket():
    import numpy as np

    from fracstefan.profiles import ProfileKind, profile_direction, profile_eval, profile_range

    rng = np.random.default_rng(20240611)
    alphas = (0.25, 0.5, 0.75)
    for kind in (ProfileKind.F, ProfileKind.G, ProfileKind.H, ProfileKind.M):
        for _ in range(1000):
            alpha = float(rng.choice(alphas))
            # targets inside the image of (1e-6, 8], i.e. with the root in the supported domain
            x_true = float(np.exp(rng.uniform(np.log(1e-6), np.log(8.0))))
            target = profile_eval(kind, x_true, alpha)
            problem = RootProblem(
                lambda x, k=kind, a=alpha: profile_eval(k, x, a),
                profile_direction(kind),
                target,
                attainable=profile_range(kind, alpha),
                upper=8.0,
            )
            root = solve_monotone(problem)
            assert residual_ok(problem, root)
