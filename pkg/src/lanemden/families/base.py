"""Abstract base class for closed-form solution families."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod

from ..errors import DomainError, RegimeError
from ..helpers import require_finite
from ..models import REGIMES, Regime, RegimeMeta, Sample, SolutionParams


class SolutionFamily(ABC):
    """One regime's closed form, written in autonomous coordinates.

    Every n=5 solution is z(s)/√(2ξ) where z depends on ξ only through
    s = ln(Bξ).  Subclasses must implement:
    - ``regime`` – the ``Regime`` they evaluate
    - ``phase(s, params)`` – return (z, dz/ds)

    and may override ``log_period``, ``special_points`` and
    ``ascending_bracket`` when the family has a discrete scale, zeros or
    poles, or a free constant B.

    ``__call__`` handles the shared lifecycle:
    1. Check that the params belong to this family and ξ is in its domain
    2. Delegate to ``phase``
    3. Convert (z, dz/ds) to (θ, dθ/dξ) by the chain rule
    """

    @property
    @abstractmethod
    def regime(self) -> Regime:
        """Regime handled by this family."""
        ...

    @property
    def meta(self) -> RegimeMeta:
        return REGIMES[self.regime]

    @abstractmethod
    def phase(self, s: float, params: SolutionParams) -> tuple[float, float]:
        """Return z and dz/ds at s = ln(Bξ), including the branch sign."""
        ...

    def accepts(self, params: SolutionParams) -> bool:
        return params.family is self.regime

    def log_period(self, C: float) -> float | None:
        """Shift in ln ξ after which |θ| repeats (None without a discrete scale)."""
        return None

    def special_points(self, params: SolutionParams) -> list[tuple[float, float]]:
        """Zero and pole lattices as (offset, spacing) pairs in s = ln(Bξ)."""
        return []

    def ascending_bracket(self, C: float) -> tuple[float, float] | None:
        """Interval of s on which z(s) increases over its whole band."""
        return None

    def at_origin(self, params: SolutionParams) -> tuple[float, float]:
        """(θ, dθ/dξ) at ξ = 0 for families regular there."""
        raise DomainError(f"{self.meta.name} solutions are singular at xi = 0")

    def __call__(self, xi: float, params: SolutionParams) -> Sample:
        if not self.accepts(params):
            raise RegimeError(
                f"{self.meta.name} cannot evaluate {params.family.value!r} params (C={params.C!r})"
            )
        xi = require_finite("xi", xi)
        if xi < 0.0:
            raise DomainError(f"xi must be positive, got {xi!r}")
        if xi == 0.0:
            theta, dtheta = self.at_origin(params)
            return Sample(xi=0.0, theta=theta, dtheta=dtheta)

        z, dz = self.phase(math.log(params.B * xi), params)
        root = math.sqrt(2.0 * xi)
        return Sample(xi=xi, theta=z / root, dtheta=(dz - 0.5 * z) / (xi * root))
