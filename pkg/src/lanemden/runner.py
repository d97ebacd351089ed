"""Verification runner: evaluates every check for a grid of C values.

Each C runs in its own worker thread; each check is isolated so one failure
becomes a failed ``CheckResult`` instead of aborting the run.
"""

from __future__ import annotations

import asyncio
import math
from typing import Callable, Iterable

import numpy as np

from . import oracle
from .config import VerifyConfig
from .factor import band, solution_regime
from .families import (
    FAMILIES,
    SolutionFamily,
    apply_scaling,
    evaluate,
    gh_constant,
    goenner_havas,
    log_scale_period,
    scaling_lambda,
    scaling_parity,
)
from .families.registry import WEIERSTRASS
from .helpers import debug_log
from .models import CheckResult, Regime, SolutionParams, WeierstrassInvariants

SCALING_ORDERS = (1, 2)


def _isolated(
    check: str,
    family: str,
    C: float,
    threshold: float,
    measure: Callable[[], float],
) -> CheckResult:
    """Run one measurement, turning any exception into a failed record."""
    try:
        value = float(measure())
        result = CheckResult(check=check, family=family, C=C, value=value, threshold=threshold)
    except Exception as e:
        result = CheckResult(
            check=check, family=family, C=C, value=math.nan, threshold=threshold,
            error=str(e) or type(e).__name__,
        )
    debug_log(
        "runner", "check",
        check=check, family=family, C=C, value=result.value, passed=result.passed,
        error=result.error,
    )
    return result


def has_weierstrass_form(C: float) -> bool:
    """Whether the ℘ form is usable at C.

    Below C ≈ 1.5e-8 the C² in g3 = 4(C² − 2) is lost to rounding, the
    invariants collapse to (12, −8) and the lattice degenerates.
    """
    return C > 0.0 and WeierstrassInvariants.from_constant(C).discriminant != 0.0


def _variants(params: SolutionParams) -> list[tuple[str, SolutionFamily]]:
    """The closed forms that represent *params*: sc solutions also have a ℘ form."""
    variants = [(params.family.value, FAMILIES[params.family])]
    if params.family is Regime.SC_FAMILY and has_weierstrass_form(params.C):
        variants.append((Regime.WEIERSTRASS_FAMILY.value, WEIERSTRASS))
    return variants


def band_violation(params: SolutionParams, family: SolutionFamily, xs: Iterable[float]) -> float:
    """Largest distance of z² outside the band of C (0 when confined)."""
    lo, hi = band(params.C)
    worst = 0.0
    for xi in xs:
        z = oracle.phase_transform(family(float(xi), params)).z
        z2 = z * z
        worst = max(worst, lo - z2, z2 - hi)
    return worst


def scaling_deviation(params: SolutionParams, m: int, xs: Iterable[float]) -> float:
    """max |θ_λ(ξ) − parity·θ(ξ)| for λ = scaling_lambda(C, m)."""
    scaled = apply_scaling(params, scaling_lambda(params.C, m))
    parity = scaling_parity(params, m)
    return max(
        abs(evaluate(scaled, float(xi)).theta - parity * evaluate(params, float(xi)).theta)
        for xi in xs
    )


def one_period_grid(params: SolutionParams, n: int) -> np.ndarray:
    """ξ grid covering one full signed period starting at ξ = 1/B."""
    period = 2.0 * log_scale_period(params.C)
    return np.exp(np.linspace(0.0, period, n)) / params.B


def sc_weierstrass_deviation(params: SolutionParams, xs: Iterable[float]) -> float:
    """sc and ℘ forms with the same B share an ascending zero at ξ = 1/B."""
    sc = FAMILIES[Regime.SC_FAMILY]
    return max(abs(sc(float(xi), params).theta - WEIERSTRASS(float(xi), params).theta) for xi in xs)


def goenner_havas_deviation(params: SolutionParams, xs: Iterable[float]) -> float:
    """| |θ_GH| − |θ_℘| | with c1 = √(C/6) and the same B."""
    c1 = gh_constant(params.C)
    return max(
        abs(abs(goenner_havas(float(xi), c1, params.B)) - abs(WEIERSTRASS(float(xi), params).theta))
        for xi in xs
    )


def verify_one(C: float, cfg: VerifyConfig) -> list[CheckResult]:
    """Every applicable check for one value of C."""
    t = cfg.thresholds
    regime = solution_regime(C)
    if regime is Regime.NO_REAL_SOLUTION:
        return [
            CheckResult(
                check="regime", family=regime.value, C=C, value=math.nan, threshold=0.0,
                error="there are no real solutions",
            )
        ]

    params = SolutionParams.for_constant(C)
    grid = np.geomspace(cfg.xi_min, cfg.xi_max, cfg.points)
    results: list[CheckResult] = []

    for name, family in _variants(params):

        def residual() -> float:
            xs = oracle.residual_grid(params, cfg.xi_min, cfg.xi_max, cfg.points, family=family)
            return oracle.ode_residual(params, xs, family=family)

        results.append(_isolated("residual", name, C, t["residual"], residual))
        results.append(_isolated(
            "energy", name, C, t["energy"],
            lambda: oracle.energy_drift(params, grid, family=family),
        ))
        results.append(_isolated(
            "band", name, C, t["band"],
            lambda: band_violation(params, family, grid),
        ))

    name = regime.value
    if FAMILIES[regime].log_period(C) is not None:
        for m in SCALING_ORDERS:
            results.append(_isolated(
                f"scaling-m{m}", name, C, t["scaling"],
                lambda m=m: scaling_deviation(params, m, grid),
            ))

    results.append(_isolated(
        "oracle", name, C, t["oracle"],
        lambda: oracle.cross_validate(params),
    ))

    if regime in (Regime.SC_FAMILY, Regime.WEIERSTRASS_FAMILY) and has_weierstrass_form(C):
        if regime is Regime.SC_FAMILY:
            results.append(_isolated(
                "equivalence", name, C, t["equivalence"],
                lambda: sc_weierstrass_deviation(params, one_period_grid(params, cfg.points)),
            ))
        results.append(_isolated(
            "goenner-havas", Regime.WEIERSTRASS_FAMILY.value, C, t["equivalence"],
            lambda: goenner_havas_deviation(params, grid),
        ))

    return results


async def verify_all(grid: Iterable[float], cfg: VerifyConfig) -> list[CheckResult]:
    """Run ``verify_one`` for every C concurrently; results keep grid order."""

    async def run(C: float) -> list[CheckResult]:
        try:
            return await asyncio.to_thread(verify_one, C, cfg)
        except Exception as e:
            return [
                CheckResult(
                    check="setup", family="?", C=C, value=math.nan, threshold=0.0,
                    error=str(e) or type(e).__name__,
                )
            ]

    batches = await asyncio.gather(*(run(float(C)) for C in grid))
    return [r for batch in batches for r in batch]
