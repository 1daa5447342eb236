"""Bracketing bisection for strictly monotone scalar equations on (0, inf)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import BracketError, RangeError

__all__ = ["RootProblem", "solve_monotone", "residual_ok"]

_MAX_DOUBLINGS = 60


@dataclass(frozen=True)
class RootProblem:
    """Find ``x > 0`` with ``func(x) == target``.

    ``attainable`` is the open range of ``func`` over the search interval;
    when given, targets outside it raise :class:`RangeError` before any
    evaluation.  ``upper`` caps the upward bracket expansion, for functions
    that are only defined on ``(0, upper]``.
    """

    func: Callable[[float], float]
    direction: str
    target: float
    bracket_seed: float = 1.0
    tolerance: float = 1e-12
    attainable: tuple[float, float] | None = None
    upper: float | None = None

    def __post_init__(self) -> None:
        if self.direction not in ("increasing", "decreasing"):
            raise ValueError(f"direction must be 'increasing' or 'decreasing', not {self.direction!r}")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not self.bracket_seed > 0:
            raise ValueError("bracket_seed must be positive")
        if self.upper is not None and not self.upper > 0:
            raise ValueError("upper must be positive")


def solve_monotone(problem: RootProblem) -> float:
    """Bisection after geometric bracketing; deterministic to the last bit."""
    target = problem.target
    if problem.attainable is not None:
        lo_val, hi_val = problem.attainable
        if not lo_val < target < hi_val:
            raise RangeError(f"target {target!r} outside attainable range ({lo_val!r}, {hi_val!r})")

    sign = 1.0 if problem.direction == "increasing" else -1.0

    def g(x: float) -> float:
        # increasing in x, root at g(x) == 0
        return sign * (problem.func(x) - target)

    seed = problem.bracket_seed
    if problem.upper is not None:
        seed = min(seed, problem.upper)
    lo = hi = seed
    g_seed = g(seed)
    if g_seed == 0.0:
        return seed
    if g_seed < 0.0:
        for _ in range(_MAX_DOUBLINGS):
            lo = hi
            if problem.upper is not None and hi >= problem.upper:
                raise BracketError(f"target {target!r} not reached below upper limit {problem.upper!r}")
            hi = 2.0 * hi if problem.upper is None else min(2.0 * hi, problem.upper)
            g_hi = g(hi)
            if g_hi == 0.0:
                return hi
            if g_hi > 0.0:
                break
        else:
            raise BracketError(f"no upper bracket for target {target!r} after {_MAX_DOUBLINGS} doublings")
    else:
        for _ in range(_MAX_DOUBLINGS):
            hi = lo
            lo = 0.5 * lo
            g_lo = g(lo)
            if g_lo == 0.0:
                return lo
            if g_lo < 0.0:
                break
        else:
            raise BracketError(f"no lower bracket for target {target!r} after {_MAX_DOUBLINGS} halvings")
    while hi - lo > problem.tolerance * lo:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        g_mid = g(mid)
        if g_mid == 0.0:
            return mid
        if g_mid < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def residual_ok(problem: RootProblem, root: float) -> bool:
    """The acceptance test used on solved roots: ``|func - target| <= 1e-10 max(1, |target|)``."""
    return abs(problem.func(root) - problem.target) <= 1e-10 * max(1.0, abs(problem.target))
