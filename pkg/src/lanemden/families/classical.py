"""The three elementary solutions: Schuster–Emden, singular, Srivastava."""

from __future__ import annotations

import math

from ..errors import DomainError
from ..helpers import require_finite
from ..models import Regime, SolutionParams
from .base import SolutionFamily

# s = ln(Bξ) far enough left that Schuster's z is below any useful target
_SCHUSTER_FAR_LEFT = -40.0


def schuster(xi: float, branch: int = 1) -> float:
    """Schuster–Emden solution ±1/√(1 + ξ²/3), regular at the origin."""
    xi = require_finite("xi", xi)
    if xi < 0.0:
        raise DomainError(f"xi must be non-negative, got {xi!r}")
    return branch / math.sqrt(1.0 + xi * xi / 3.0)


def singular(xi: float, branch: int = 1) -> float:
    """Singular solution ±1/√(2ξ), the fixed point of the scaling map."""
    xi = require_finite("xi", xi)
    if xi <= 0.0:
        raise DomainError(f"xi must be positive, got {xi!r}")
    return branch / math.sqrt(2.0 * xi)


def srivastava(xi: float, B: float = 1.0, branch: int = 1) -> float:
    """Srivastava's solution at scale B; zeros where ln√(Bξ) is a multiple of π."""
    xi = require_finite("xi", xi)
    if xi <= 0.0:
        raise DomainError(f"xi must be positive, got {xi!r}")
    S = math.sin(0.5 * math.log(B * xi))
    return branch * S / math.sqrt(xi * (3.0 - 2.0 * S * S))


class SchusterFamily(SolutionFamily):
    """C = 0.  With scale B: θ = √B/√(1 + (Bξ)²/3)."""

    @property
    def regime(self) -> Regime:
        return Regime.SCHUSTER

    def phase(self, s: float, params: SolutionParams) -> tuple[float, float]:
        y = math.exp(s)
        q = 3.0 + y * y
        z = math.sqrt(6.0 * y / q)
        dz = 3.0 * y * (3.0 - y * y) / (q * q * z)
        return params.branch * z, params.branch * dz

    def at_origin(self, params: SolutionParams) -> tuple[float, float]:
        return params.branch * math.sqrt(params.B), 0.0

    def ascending_bracket(self, C: float) -> tuple[float, float] | None:
        # z peaks at 3^(1/4) where Bξ = √3
        return _SCHUSTER_FAR_LEFT, 0.5 * math.log(3.0)


class SingularFamily(SolutionFamily):
    """C = −2.  z ≡ 1, so θ = 1/√(2ξ) for every B."""

    @property
    def regime(self) -> Regime:
        return Regime.SINGULAR_FIXED_POINT

    def phase(self, s: float, params: SolutionParams) -> tuple[float, float]:
        return float(params.branch), 0.0


class SrivastavaFamily(SolutionFamily):
    """C = 2.  z = √2·sin L/√(3 − 2 sin² L) with L = s/2."""

    @property
    def regime(self) -> Regime:
        return Regime.SRIVASTAVA

    def phase(self, s: float, params: SolutionParams) -> tuple[float, float]:
        S, Cs = math.sin(0.5 * s), math.cos(0.5 * s)
        D = 3.0 - 2.0 * S * S
        z = math.sqrt(2.0) * S / math.sqrt(D)
        dz = 1.5 * math.sqrt(2.0) * Cs / D ** 1.5
        return params.branch * z, params.branch * dz

    def log_period(self, C: float) -> float | None:
        return 2.0 * math.pi

    def special_points(self, params: SolutionParams) -> list[tuple[float, float]]:
        return [(0.0, 2.0 * math.pi)]

    def ascending_bracket(self, C: float) -> tuple[float, float] | None:
        return -math.pi, math.pi
