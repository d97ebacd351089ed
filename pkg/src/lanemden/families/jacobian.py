"""Jacobian elliptic families for −2 < C < 0 (dc) and 0 < C < 2 (sc).

Both use u = κ·ln(Bξ) with κ = ½√((a+c)b/3) and the modulus from
``factor.modulus_k``.  The textbook formulas are written through dc and sc;
here they are evaluated through sn, cn and dn directly, so the poles of dc
and sc are ordinary points:

- dc family: z² = ab / (b − (b−a)·cd²),     a ≤ z² ≤ b
- sc family: z  = √(ac)·sn / √((a+c) − c·sn²),  0 ≤ z² ≤ c

As C → 0 the root a shrinks to |C|/3 and both denominators fall to about a
where cd² or sn² approaches 1.  They are therefore evaluated as sums of
non-negative terms, using 1 − cd² = k'²·sn²/dn² and 1 − sn² = cn²:

- dc family: z = √(ab)·dn / √(b·k'²·sn² + a·cn²)
- sc family: z = √(ac)·sn / √(a + c·cn²)

The sc family carries sign(sn), which is what sign(sc) becomes when the
curve is continued smoothly through the poles of sc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .. import factor
from ..elliptic import complete_K, jacobi_sncndn
from ..models import CardanoRoots, Modulus, Regime, SolutionParams
from .base import SolutionFamily


@dataclass(frozen=True)
class JacobianConstants:
    """Per-C quantities shared by the dc and sc families."""

    roots: CardanoRoots
    modulus: Modulus
    kappa: float
    K: float

    @property
    def half_period(self) -> float:
        """K/κ: distance in s = ln(Bξ) between a zero of sn and a zero of cn."""
        return self.K / self.kappa


def jacobian_constants(C: float) -> JacobianConstants:
    roots = factor.cardano_roots(C)
    modulus = factor.modulus_k(roots)
    kappa = 0.5 * math.sqrt((roots.a + roots.c) * roots.b / 3.0)
    return JacobianConstants(roots=roots, modulus=modulus, kappa=kappa, K=complete_K(modulus))


class _JacobianFamily(SolutionFamily):
    def log_period(self, C: float) -> float | None:
        # 2K/κ = 4√3·K/√((a+c)b)
        return 2.0 * jacobian_constants(C).half_period

    def ascending_bracket(self, C: float) -> tuple[float, float] | None:
        h = jacobian_constants(C).half_period
        return -h, h


class DcFamily(_JacobianFamily):
    @property
    def regime(self) -> Regime:
        return Regime.DC_FAMILY

    def phase(self, s: float, params: SolutionParams) -> tuple[float, float]:
        jc = jacobian_constants(params.C)
        a, b = jc.roots.a, jc.roots.b
        kc2 = jc.modulus.kc ** 2
        t = jacobi_sncndn(jc.kappa * s, jc.modulus)
        N = b * kc2 * t.sn * t.sn + a * t.cn * t.cn
        root_ab = math.sqrt(a * b)
        z = root_ab * t.dn / math.sqrt(N)
        dz = -jc.kappa * root_ab * (b - a) * kc2 * t.sn * t.cn / N ** 1.5
        return params.branch * z, params.branch * dz

    def ascending_bracket(self, C: float) -> tuple[float, float] | None:
        # z² climbs from a at cd = 0 (u = −K) to b at cd = 1 (u = 0)
        return -jacobian_constants(C).half_period, 0.0

    def special_points(self, params: SolutionParams) -> list[tuple[float, float]]:
        h = jacobian_constants(params.C).half_period
        return [(h, 2.0 * h)]


class ScFamily(_JacobianFamily):
    @property
    def regime(self) -> Regime:
        return Regime.SC_FAMILY

    def phase(self, s: float, params: SolutionParams) -> tuple[float, float]:
        jc = jacobian_constants(params.C)
        a, c = jc.roots.a, jc.roots.c
        t = jacobi_sncndn(jc.kappa * s, jc.modulus)
        G = a + c * t.cn * t.cn
        root_ac = math.sqrt(a * c)
        z = root_ac * t.sn / math.sqrt(G)
        dz = jc.kappa * root_ac * (a + c) * t.cn * t.dn / G ** 1.5
        return params.branch * z, params.branch * dz

    def special_points(self, params: SolutionParams) -> list[tuple[float, float]]:
        h = jacobian_constants(params.C).half_period
        # zeros of θ, then poles of sc
        return [(0.0, 2.0 * h), (h, 2.0 * h)]
