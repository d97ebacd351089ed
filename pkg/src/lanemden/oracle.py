"""Independent checks on the closed forms.

The integrator and the sextic root finder never call the elliptic kernel:
the ODE is integrated numerically and the sextic is root-bracketed on a grid.
The comparison helpers (``cross_validate``, ``ode_residual``,
``residual_grid``, ``energy_drift``) evaluate the closed forms they check.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import bisect

from .errors import DomainError, IntegrationError, LaneEmdenError
from .families import SolutionFamily, evaluate, family_for, log_scale_period
from .helpers import debug_log, require_finite, richardson_derivative
from .helpers import xi_grid as build_grid
from .models import PhasePoint, Sample, SolutionParams, Trajectory

TOL_MIN = 1e-13
TOL_MAX = 1e-3
# Smallest ξ-step considered meaningful when integrating toward the origin
STEP_FLOOR = 1e-12
SPECIAL_EXCLUSION = 1e-6
ROOT_XTOL = 1e-14


# ── Autonomous form ────────────────────────────────────────


def phase_transform(s: Sample) -> PhasePoint:
    """(ξ, θ, θ′) → (t, z, dz/dt) with t = −ln ξ and z = θ√(2ξ)."""
    if not s.xi > 0.0:
        raise DomainError(f"phase transform needs xi > 0, got {s.xi!r}")
    r = math.sqrt(2.0 * s.xi)
    dz_dxi = r * s.dtheta + s.theta / r
    return PhasePoint(t=-math.log(s.xi), z=s.theta * r, dz=-s.xi * dz_dxi)


def sample_from_phase(p: PhasePoint) -> Sample:
    """Inverse of ``phase_transform``."""
    xi = math.exp(-p.t)
    r = math.sqrt(2.0 * xi)
    theta = p.z / r
    dz_dxi = -p.dz / xi
    return Sample(xi=xi, theta=theta, dtheta=(dz_dxi - theta / r) / r)


def energy_constant(p: PhasePoint) -> float:
    """C = 12·(dz/dt)² + z⁶ − 3z², conserved along every solution."""
    z2 = p.z * p.z
    return 12.0 * p.dz * p.dz + z2 * (z2 * z2 - 3.0)


def sample_energy(s: Sample) -> float:
    return energy_constant(phase_transform(s))


# ── Numerical integration ──────────────────────────────────


def _rhs(xi: float, y: np.ndarray) -> np.ndarray:
    theta, dtheta = float(y[0]), float(y[1])
    return np.array([dtheta, -2.0 * dtheta / xi - theta ** 5], dtype=float)


def _oscillation_period(C: float) -> float | None:
    """Full period in t of an oscillating solution, None otherwise."""
    if not C > 0.0:
        return None
    try:
        return 2.0 * log_scale_period(C)
    except LaneEmdenError:
        return None


def integrate_lane_emden(
    theta0: float,
    dtheta0: float,
    xi0: float,
    xi1: float,
    tol: float,
    *,
    n_samples: int = 200,
) -> Trajectory:
    """Integrate θ″ = −2θ′/ξ − θ⁵ from (xi0, θ0, θ′0) to xi1.

    Uses scipy's Dormand–Prince 5(4) pair (RK45) with rtol = atol = *tol*
    and samples the dense output on a log-spaced grid.  Step sizes come from
    scipy's standard elementary controller, not a PI controller.
    Integration may run in either direction.  Toward the origin, solutions
    with C > 0 oscillate ever faster in ξ; the run stops once a full
    oscillation is shorter than 100 × ``STEP_FLOOR`` and the trajectory is
    flagged ``truncated``.
    """
    theta0 = require_finite("theta0", theta0)
    dtheta0 = require_finite("dtheta0", dtheta0)
    xi0 = require_finite("xi0", xi0)
    xi1 = require_finite("xi1", xi1)
    tol = require_finite("tol", tol)
    if xi0 <= 0.0 or xi1 <= 0.0:
        raise DomainError(f"integration endpoints must be positive, got {xi0!r} → {xi1!r}")
    if xi0 == xi1:
        raise DomainError("integration span is empty")
    if not TOL_MIN <= tol <= TOL_MAX:
        raise DomainError(f"tol must lie in [{TOL_MIN:g}, {TOL_MAX:g}], got {tol!r}")

    start = Sample(xi=xi0, theta=theta0, dtheta=dtheta0)
    c_start = sample_energy(start)

    events = None
    if xi1 < xi0:
        period = _oscillation_period(c_start)
        if period is not None:

            def too_fast(xi: float, y: np.ndarray) -> float:
                return xi * period - 100.0 * STEP_FLOOR

            too_fast.terminal = True
            events = too_fast

    debug_log("oracle", "integrate_start", xi0=xi0, xi1=xi1, tol=tol, c_start=c_start)
    sol = solve_ivp(
        _rhs,
        (xi0, xi1),
        np.array([theta0, dtheta0], dtype=float),
        method="RK45",
        rtol=tol,
        atol=tol,
        dense_output=True,
        events=events,
    )

    if sol.status == -1:
        last = Sample(xi=float(sol.t[-1]), theta=float(sol.y[0, -1]), dtheta=float(sol.y[1, -1]))
        debug_log("oracle", "integrate_failed", message=sol.message, last_xi=last.xi)
        raise IntegrationError(f"integration failed near xi={last.xi:.6g}: {sol.message}", last)

    truncated = sol.status == 1
    end = float(sol.t[-1])
    grid = np.geomspace(xi0, end, max(n_samples, 2))
    dense = sol.sol(grid)
    points = [
        Sample(xi=float(x), theta=float(th), dtheta=float(dth))
        for x, th, dth in zip(grid, dense[0], dense[1])
    ]
    c_end = sample_energy(points[-1])
    debug_log(
        "oracle", "integrate_done",
        steps=len(sol.t), end=end, truncated=truncated, drift=abs(c_end - c_start),
    )
    return Trajectory(
        points=points, tolerance=tol, c_estimate=c_end, c_start=c_start, truncated=truncated,
    )


def cross_validate(
    params: SolutionParams,
    xi0: float = 0.2,
    xi1: float = 5.0,
    tol: float = 1e-11,
) -> float:
    """Largest |θ_numeric − θ_closed| along a trajectory seeded from the closed form."""
    seed = evaluate(params, xi0)
    traj = integrate_lane_emden(seed.theta, seed.dtheta, xi0, xi1, tol)
    return max(abs(p.theta - evaluate(params, p.xi).theta) for p in traj.points)


# ── Residuals ──────────────────────────────────────────────


def _evaluator(params: SolutionParams, family: SolutionFamily | None) -> Callable[[float], Sample]:
    if family is None:
        return lambda xi: evaluate(params, xi)
    return lambda xi: family(xi, params)


def ode_residual(
    params: SolutionParams,
    xi_grid: Iterable[float],
    *,
    family: SolutionFamily | None = None,
) -> float:
    """Max of |ξ²θ″ + 2ξθ′ + ξ²θ⁵| / (1 + ξ²|θ|⁵ + ξ|θ′|) over the grid.

    θ″ is a Richardson-extrapolated central difference of the analytic θ′.
    """
    ev = _evaluator(params, family)
    xs = [float(x) for x in xi_grid]
    if not xs:
        raise DomainError("ode_residual needs a non-empty grid")

    worst = 0.0
    for xi in xs:
        s = ev(xi)
        d2 = richardson_derivative(lambda x: ev(x).dtheta, xi)
        theta5 = s.theta ** 5
        residual = xi * xi * d2 + 2.0 * xi * s.dtheta + xi * xi * theta5
        scale = 1.0 + xi * xi * abs(theta5) + xi * abs(s.dtheta)
        worst = max(worst, abs(residual) / scale)
    return worst


def residual_grid(
    params: SolutionParams,
    xi_min: float = 0.1,
    xi_max: float = 10.0,
    n: int = 200,
    exclusion: float = SPECIAL_EXCLUSION,
    *,
    family: SolutionFamily | None = None,
) -> np.ndarray:
    """Log-spaced grid with the neighborhoods of zeros and poles removed."""
    grid = build_grid(xi_min, xi_max, n)
    lattices = (family or family_for(params.family)).special_points(params)
    if not lattices:
        return grid

    s = np.log(params.B * grid)
    keep = np.ones_like(grid, dtype=bool)
    for offset, spacing in lattices:
        shifted = (s - offset) / spacing
        keep &= np.abs(shifted - np.round(shifted)) * spacing > exclusion
    return grid[keep]


def energy_drift(
    params: SolutionParams,
    xi_grid: Iterable[float],
    *,
    family: SolutionFamily | None = None,
) -> float:
    """Largest |C(ξ) − C| of the energy constant along the closed form."""
    ev = _evaluator(params, family)
    errors = [abs(sample_energy(ev(float(x))) - params.C) for x in xi_grid]
    if not errors:
        raise DomainError("energy_drift needs a non-empty grid")
    return max(errors)


# ── Brute-force roots ──────────────────────────────────────


def _w(z: float, C: float) -> float:
    return -z ** 6 + 3.0 * z * z + C


def _dw(z: float) -> float:
    return -6.0 * z ** 5 + 6.0 * z


def sextic_roots_oracle(C: float, *, n_grid: int = 4001) -> list[float]:
    """Real roots of −z⁶ + 3z² + C on [−2, 2], sorted.

    Critical points of w are bracketed on a uniform grid and refined, which
    splits [−2, 2] into monotone pieces; each piece holds at most one simple
    root.  A critical point where w vanishes is a double root.
    """
    C = require_finite("C", C)
    grid = np.linspace(-2.0, 2.0, n_grid)
    slopes = [_dw(float(g)) for g in grid]

    critical: list[float] = []
    for i, g in enumerate(grid):
        if slopes[i] == 0.0:
            critical.append(float(g))
        elif i + 1 < n_grid and slopes[i] * slopes[i + 1] < 0.0:
            critical.append(bisect(_dw, float(g), float(grid[i + 1]), xtol=ROOT_XTOL))

    roots = [c for c in critical if abs(_w(c, C)) <= 1e-12]
    knots = [-2.0, *critical, 2.0]
    for lo, hi in zip(knots, knots[1:]):
        if hi <= lo:
            continue
        w_lo, w_hi = _w(lo, C), _w(hi, C)
        if w_lo * w_hi < 0.0:
            roots.append(bisect(_w, lo, hi, args=(C,), xtol=ROOT_XTOL))

    roots.sort()
    deduped: list[float] = []
    for r in roots:
        if not deduped or r - deduped[-1] > 1e-11:
            deduped.append(r)
    return deduped
