"""Data carried by an inverse fractional Stefan problem."""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

__all__ = ["COEFFICIENT_NAMES", "CaseId", "Coefficients", "ProblemData"]

COEFFICIENT_NAMES = ("k", "rho", "c", "l")


class CaseId(enum.IntEnum):
    """The six choices of two unknown coefficients among k, rho, c, l."""

    LC = 1
    CK = 2
    LK = 3
    CRHO = 4
    LRHO = 5
    RHOK = 6

    @property
    def unknowns(self) -> tuple[str, str]:
        return _UNKNOWNS[self]

    @property
    def knowns(self) -> tuple[str, str]:
        return tuple(n for n in COEFFICIENT_NAMES if n not in _UNKNOWNS[self])  # type: ignore[return-value]


_UNKNOWNS = {
    CaseId.LC: ("l", "c"),
    CaseId.CK: ("c", "k"),
    CaseId.LK: ("l", "k"),
    CaseId.CRHO: ("c", "rho"),
    CaseId.LRHO: ("l", "rho"),
    CaseId.RHOK: ("rho", "k"),
}


@dataclass(frozen=True)
class Coefficients:
    """Thermal conductivity k, density rho, specific heat c and latent heat l.

    ``recovered`` names the coefficients that were determined rather than given.
    """

    k: float
    rho: float
    c: float
    l: float
    recovered: tuple[str, ...] = ()

    @property
    def diffusivity(self) -> float:
        """``lambda = sqrt(k / (rho c))``, the square root of the thermal diffusivity."""
        return math.sqrt(self.k / (self.rho * self.c))

    def as_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in COEFFICIENT_NAMES}


@dataclass(frozen=True)
class ProblemData:
    """Known scalars of the problem.

    Temperatures in degrees Celsius, ``sigma`` in m s^(-alpha/2); ``mu`` and
    ``nu`` carry the units that keep the fractional equations dimensionally
    consistent and tend to 1 as ``alpha -> 1``.  Any of the four thermal
    coefficients may be left as ``None``.
    """

    alpha: float
    T_m: float
    T_0: float
    q_0: float
    sigma: float
    mu: float = 1.0
    nu: float = 1.0
    k: float | None = None
    rho: float | None = None
    c: float | None = None
    l: float | None = None

    def __post_init__(self) -> None:
        for name in ("alpha", "T_m", "T_0", "q_0", "sigma", "mu", "nu"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha={self.alpha!r} outside (0, 1]")
        if not 0.0 < self.mu <= 1.0:
            raise ValueError(f"mu={self.mu!r} outside (0, 1]")
        if not 0.0 < self.nu <= 1.0:
            raise ValueError(f"nu={self.nu!r} outside (0, 1]")
        if not self.T_0 > self.T_m:
            raise ValueError("T_0 must exceed T_m")
        if not self.q_0 > 0:
            raise ValueError("q_0 must be positive")
        if not self.sigma > 0:
            raise ValueError("sigma must be positive")
        for name in COEFFICIENT_NAMES:
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive when given")

    @property
    def dT(self) -> float:
        return self.T_0 - self.T_m

    @property
    def known(self) -> dict[str, float]:
        return {n: getattr(self, n) for n in COEFFICIENT_NAMES if getattr(self, n) is not None}

    def replace(self, **changes) -> ProblemData:
        return dataclasses.replace(self, **changes)

    def hide(self, *names: str) -> ProblemData:
        """Copy with the named coefficients removed."""
        return dataclasses.replace(self, **{n: None for n in names})

    def for_case(self, case: CaseId) -> ProblemData:
        """Copy keeping only the coefficients that ``case`` treats as known."""
        return self.hide(*CaseId(case).unknowns)
