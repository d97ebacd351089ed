"""Central family registry and the operations that dispatch over it.

``FAMILIES`` is the single source of truth mapping each regime with real
solutions to the object that evaluates it.
"""

from __future__ import annotations

import dataclasses
import math

from scipy.optimize import bisect

from ..errors import DomainError, RegimeError
from ..helpers import debug_log, require_finite
from ..models import Regime, Sample, SolutionParams
from .base import SolutionFamily
from .classical import SchusterFamily, SingularFamily, SrivastavaFamily
from .jacobian import DcFamily, ScFamily
from .weierstrass import WeierstrassFamily

CALIBRATION_TOL = 1e-13

DC = DcFamily()
SC = ScFamily()
WEIERSTRASS = WeierstrassFamily()

FAMILIES: dict[Regime, SolutionFamily] = {
    Regime.SINGULAR_FIXED_POINT: SingularFamily(),
    Regime.DC_FAMILY: DC,
    Regime.SCHUSTER: SchusterFamily(),
    Regime.SC_FAMILY: SC,
    Regime.SRIVASTAVA: SrivastavaFamily(),
    Regime.WEIERSTRASS_FAMILY: WEIERSTRASS,
}


def family_for(regime: Regime) -> SolutionFamily:
    try:
        return FAMILIES[regime]
    except KeyError:
        raise RegimeError("there are no real solutions for C < -2") from None


def evaluate(params: SolutionParams, xi: float) -> Sample:
    """(ξ, θ, dθ/dξ) for any regime, with the derivative taken analytically."""
    return family_for(params.family)(xi, params)


def dc_family(xi: float, params: SolutionParams) -> float:
    return DC(xi, params).theta


def sc_family(xi: float, params: SolutionParams) -> float:
    return SC(xi, params).theta


def weier_family(xi: float, params: SolutionParams) -> float:
    """Weierstrass form of any C > 0 solution (sc-family params included)."""
    return WEIERSTRASS(xi, params).theta


# ── Discrete scaling ───────────────────────────────────────


def log_scale_period(C: float) -> float:
    """ln λ(C, 1): the shift in ln ξ under which |θ| is invariant."""
    family = family_for(SolutionParams.for_constant(C).family)
    period = family.log_period(C)
    if period is None:
        raise RegimeError(f"{family.meta.name} solutions (C={C!r}) have no discrete scaling period")
    return period


def scaling_lambda(C: float, m: int) -> float:
    """λ = exp(m·ln λ(C, 1)); m = 0 gives exactly 1."""
    if m == 0:
        log_scale_period(C)
        return 1.0
    return math.exp(m * log_scale_period(C))


def scaling_parity(params: SolutionParams, m: int) -> int:
    """Sign picked up by θ under λ(C, m): oscillating families flip once per period."""
    if params.meta.oscillating and m % 2:
        return -1
    return 1


def apply_scaling(params: SolutionParams, lam: float) -> SolutionParams:
    """Params of θ(ξ/λ)/√λ, which is the same family with B → B/λ."""
    lam = require_finite("lambda", lam)
    if lam <= 0.0:
        raise DomainError(f"lambda must be positive, got {lam!r}")
    if lam == 1.0:
        return params
    return dataclasses.replace(params, B=params.B / lam)


# ── Calibration ────────────────────────────────────────────


def calibrate_B(C: float, xi0: float, z0: float) -> float:
    """B putting z = θ√(2ξ) equal to *z0* at *xi0* on the first ascending branch.

    The dc family is matched on |z0| since its z never changes sign.
    """
    xi0 = require_finite("xi0", xi0)
    z0 = require_finite("z0", z0)
    if xi0 <= 0.0:
        raise DomainError(f"xi0 must be positive, got {xi0!r}")

    params = SolutionParams.for_constant(C)
    family = family_for(params.family)
    bracket = family.ascending_bracket(C)
    if bracket is None:
        raise RegimeError(f"{family.meta.name} solutions have no free scale B")

    target = abs(z0) if family is DC else z0

    def miss(s: float) -> float:
        return family.phase(s, params)[0] - target

    lo, hi = bracket
    f_lo, f_hi = miss(lo), miss(hi)
    if abs(f_lo) <= CALIBRATION_TOL:
        s = lo
    elif abs(f_hi) <= CALIBRATION_TOL:
        s = hi
    elif f_lo > 0.0 or f_hi < 0.0:
        raise DomainError(
            f"z0={z0!r} is unreachable for C={C!r}: the branch spans "
            f"[{f_lo + target:.6g}, {f_hi + target:.6g}]"
        )
    else:
        s = bisect(miss, lo, hi, xtol=1e-14, maxiter=200)

    B = math.exp(s) / xi0
    debug_log("families", "calibrate", C=C, xi0=xi0, z0=z0, s=s, B=B)
    return B
