"""Regime classification and factorization of w(z) = −z⁶ + 3z² + C.

With u = z² the sextic is the cubic −u³ + 3u + C.  Its roots give:

- −2 < C < 0:  w = (z² − a)(b − z²)(z² + c)
-  0 < C < 2:  w = (z² + a)(z² + b)(c − z²)
-      C > 2:  w = (f − z²)(z⁴ + f·z² + f² − 3)

where (a, b, c) are the trigonometric Cardano roots and f = A + 1/A.
"""

from __future__ import annotations

import math

from .errors import DegenerateModulusError, RegimeError
from .helpers import require_finite
from .models import CardanoRoots, DepressedRoot, Modulus, Regime

BOUNDARY_TOL = 1e-12
SCHUSTER_BAND = 1e-10
DEGENERATE_K = 1.0 - 1e-12

_BOUNDARIES = (
    (-2.0, Regime.SINGULAR_FIXED_POINT),
    (0.0, Regime.SCHUSTER),
    (2.0, Regime.SRIVASTAVA),
)


def classify(C: float) -> Regime:
    """Map C to its regime; values within 1e-12 of -2, 0 or 2 snap to the boundary."""
    C = require_finite("C", C)
    for boundary, regime in _BOUNDARIES:
        if abs(C - boundary) <= BOUNDARY_TOL:
            return regime
    if C < -2.0:
        return Regime.NO_REAL_SOLUTION
    if C < 0.0:
        return Regime.DC_FAMILY
    if C < 2.0:
        return Regime.SC_FAMILY
    return Regime.WEIERSTRASS_FAMILY


def solution_regime(C: float) -> Regime:
    """``classify`` plus the Schuster band |C| < 1e-10 for the Jacobian regimes.

    K(k) loses all precision as k → 1, so solutions that close to C = 0 are
    evaluated with the exact Schuster formula.
    """
    regime = classify(C)
    if regime in (Regime.DC_FAMILY, Regime.SC_FAMILY) and abs(C) < SCHUSTER_BAND:
        return Regime.SCHUSTER
    return regime


def cardano_roots(C: float) -> CardanoRoots:
    """Roots (a, b, c) of the cubic in u for 0 < |C| < 2."""
    C = require_finite("C", C)
    m = abs(C)
    if m == 0.0 or m >= 2.0:
        raise RegimeError(f"Cardano roots need 0 < |C| < 2, got C={C!r}")
    a = 2.0 * math.sin(math.asin(m / 2.0) / 3.0)
    b = 2.0 * math.cos(math.acos(-m / 2.0) / 3.0)
    c = 2.0 * math.cos(math.acos(m / 2.0) / 3.0)
    return CardanoRoots(a=a, b=b, c=c, C=C)


def positive_root_f(C: float) -> DepressedRoot:
    """Positive root f of u³ − 3u − C for C ≥ 2."""
    C = require_finite("C", C)
    if C < 2.0:
        raise RegimeError(f"positive root f needs C >= 2, got C={C!r}")
    # (C − √(C²−4))/2 written as 2/(C + √(C²−4)) to avoid cancellation
    A = math.cbrt(2.0 / (C + math.sqrt(C * C - 4.0)))
    return DepressedRoot(f=A + 1.0 / A, A=A, C=C)


def modulus_k(roots: CardanoRoots) -> Modulus:
    """k = √((b−a)c / ((a+c)b)) with complement k' = √(a(b+c) / ((a+c)b))."""
    a, b, c = roots.a, roots.b, roots.c
    denom = (a + c) * b
    k = math.sqrt((b - a) * c / denom)
    if k >= DEGENERATE_K:
        raise DegenerateModulusError(
            f"modulus k={k!r} too close to 1 for C={roots.C!r}; use the Schuster solution"
        )
    return Modulus(k=k, kc=math.sqrt(a * (b + c) / denom))


def sextic_eval(z: float, C: float) -> float:
    """w(z) = −z⁶ + 3z² + C, grouped as C + u(3 − u²) with u = z²."""
    u = z * z
    return C + u * (3.0 - u * u)


def factored_eval(z: float, C: float) -> float:
    """w(z) rebuilt from the factorization of C's regime."""
    u = z * z
    regime = classify(C)
    if regime is Regime.DC_FAMILY:
        r = cardano_roots(C)
        return (u - r.a) * (r.b - u) * (u + r.c)
    if regime is Regime.SC_FAMILY:
        r = cardano_roots(C)
        return (u + r.a) * (u + r.b) * (r.c - u)
    if regime in (Regime.SRIVASTAVA, Regime.WEIERSTRASS_FAMILY):
        f = positive_root_f(max(C, 2.0)).f
        return (f - u) * (u * u + f * u + f * f - 3.0)
    if regime is Regime.SINGULAR_FIXED_POINT:
        return -((u - 1.0) ** 2) * (u + 2.0)
    if regime is Regime.SCHUSTER:
        return -u * (u * u - 3.0)
    raise RegimeError(f"w(z) has no real factorization with real roots for C={C!r}")


def band(C: float) -> tuple[float, float]:
    """Closed interval of z² = 2ξθ² reachable by solutions with constant C."""
    regime = solution_regime(C)
    if regime is Regime.DC_FAMILY:
        r = cardano_roots(C)
        return r.a, r.b
    if regime is Regime.SC_FAMILY:
        return 0.0, cardano_roots(C).c
    if regime is Regime.WEIERSTRASS_FAMILY:
        return 0.0, positive_root_f(C).f
    if regime is Regime.SRIVASTAVA:
        return 0.0, 2.0
    if regime is Regime.SCHUSTER:
        return 0.0, math.sqrt(3.0)
    if regime is Regime.SINGULAR_FIXED_POINT:
        return 1.0, 1.0
    raise RegimeError(f"there are no real solutions for C={C!r}")
