"""Weierstrass family for C > 0 and the Goenner–Havas form.

With x = ln(Bξ)/(2√3) and invariants (12, 4(C² − 2)):

    θ = σ·√(C / (2ξ(℘(x) − 1)))

where σ flips at every pole of ℘.  ℘ ≥ e1 = 1 + C/f > 1, so the radicand
stays positive; ``weierstrass_signed_reciprocal`` supplies σ/√(℘ − 1) from
the argument alone.

The Goenner–Havas form uses ℘ at ln(Bξ)/2 with invariants
(4/3, −8/27 + 16c1⁴/3).  Homogeneity with λ = √3 maps one onto the other:
℘(x; 12, g3) = 3·℘(√3·x; 4/3, g3/27), hence c1 = √(C/6) with the same B,
and θ_GH = |θ| of the Weierstrass family.
"""

from __future__ import annotations

import math

from ..elliptic import weierstrass_p, weierstrass_real_period, weierstrass_signed_reciprocal
from ..errors import DomainError, PoleError
from ..helpers import require_finite
from ..models import Regime, SolutionParams, WeierstrassInvariants
from .base import SolutionFamily
from .jacobian import jacobian_constants

_ROOT3 = math.sqrt(3.0)


class WeierstrassFamily(SolutionFamily):
    @property
    def regime(self) -> Regime:
        return Regime.WEIERSTRASS_FAMILY

    def accepts(self, params: SolutionParams) -> bool:
        # valid for all C > 0 except the degenerate lattice at C = 2
        return params.family in (Regime.SC_FAMILY, Regime.WEIERSTRASS_FAMILY)

    def phase(self, s: float, params: SolutionParams) -> tuple[float, float]:
        inv = WeierstrassInvariants.from_constant(params.C)
        Z, dZ = weierstrass_signed_reciprocal(s / (2.0 * _ROOT3), inv, shift=1.0)
        amp = params.branch * math.sqrt(params.C)
        return amp * Z, amp * dZ / (2.0 * _ROOT3)

    def log_period(self, C: float) -> float | None:
        return 2.0 * _ROOT3 * weierstrass_real_period(WeierstrassInvariants.from_constant(C))

    def special_points(self, params: SolutionParams) -> list[tuple[float, float]]:
        if params.family is Regime.SC_FAMILY:
            # same zeros as the sc form; its period survives C → 0
            return [(0.0, 2.0 * jacobian_constants(params.C).half_period)]
        return [(0.0, self.log_period(params.C))]

    def ascending_bracket(self, C: float) -> tuple[float, float] | None:
        half = 0.5 * self.log_period(C)
        return -half, half


def gh_constant(C: float) -> float:
    """c1 of the Goenner–Havas form matching the Weierstrass family at constant C."""
    C = require_finite("C", C)
    if C <= 0.0:
        raise DomainError(f"Goenner–Havas form needs C > 0, got {C!r}")
    return math.sqrt(C / 6.0)


def gh_invariants(c1: float) -> WeierstrassInvariants:
    return WeierstrassInvariants(g2=4.0 / 3.0, g3=-8.0 / 27.0 + 16.0 * c1 ** 4 / 3.0)


def goenner_havas(xi: float, c1: float, B: float = 1.0) -> float:
    """Goenner–Havas solution c1/√(ξ(℘(ln(Bξ)/2) − 1/3)); zero at the lattice points."""
    xi = require_finite("xi", xi)
    if xi <= 0.0:
        raise DomainError(f"xi must be positive, got {xi!r}")
    try:
        p = weierstrass_p(0.5 * math.log(B * xi), gh_invariants(c1))
    except PoleError:
        return 0.0
    return c1 / math.sqrt(xi * (p - 1.0 / 3.0))
