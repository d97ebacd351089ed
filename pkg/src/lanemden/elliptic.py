"""Real-argument elliptic function kernel.

Conventions:

- Every public function takes the elliptic *modulus* k (a float in [0, 1) or a
  ``Modulus``), never the parameter m = k².  Standard references mix the two;
  ``scipy.special.ellipk`` and ``ellipj`` for example take m.
- Poles are never returned as infinities.  Evaluating dc, sc, cs or ℘ within
  ``POLE_TOL`` of a pole raises ``PoleError``; code that must pass through
  poles uses the reciprocal functions (cd, cs) or the signed reciprocal
  ``weierstrass_signed_reciprocal``.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    ConvergenceError,
    DegenerateLatticeError,
    DegenerateModulusError,
    DomainError,
    PoleError,
)
from .helpers import require_finite
from .models import JacobiTriple, Modulus, WeierstrassInvariants

POLE_TOL = 1e-12
MAX_AGM_STEPS = 64

ModulusLike = float | Modulus


def as_modulus(k: ModulusLike) -> Modulus:
    """Validate *k* and return it as a ``Modulus``."""
    if isinstance(k, Modulus):
        value, kc = k.k, k.kc
    else:
        value = require_finite("modulus k", k)
        if value < 0.0 or value >= 1.0:
            raise DomainError(f"modulus k must lie in [0, 1), got {value!r}")
        kc = math.sqrt((1.0 - value) * (1.0 + value))
    if value < 0.0 or value >= 1.0 or not kc > 0.0:
        raise DomainError(f"modulus k must lie in [0, 1), got {value!r}")
    return Modulus(k=value, kc=kc)


# ── AGM and K(k) ───────────────────────────────────────────


@lru_cache(maxsize=256)
def _agm_table(k: float, kc: float) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """AGM sequences (a_n, c_n) seeded with a_0 = 1, b_0 = k', c_0 = k."""
    a, b = 1.0, kc
    a_seq, c_seq = [a], [k]
    for _ in range(MAX_AGM_STEPS):
        if abs(a - b) <= 4.0 * math.ulp(a):
            return tuple(a_seq), tuple(c_seq)
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_seq.append(a)
        c_seq.append(c)
    raise ConvergenceError(f"AGM did not converge for k={k!r} in {MAX_AGM_STEPS} steps")


def complete_K(k: ModulusLike) -> float:
    """Complete elliptic integral of the first kind, K(k) = π / (2·AGM(1, k'))."""
    mod = as_modulus(k)
    a_seq, _ = _agm_table(mod.k, mod.kc)
    return math.pi / (2.0 * a_seq[-1])


# ── Jacobian functions ─────────────────────────────────────


def jacobi_sncndn(u: float, k: ModulusLike) -> JacobiTriple:
    """sn, cn and dn by descending Landen transformation.

    The argument is first reduced modulo 4K(k).  The phase recursion follows
    DLMF 22.20(ii); dn is taken from dn² = k'² + k²·cn², which has no
    cancellation even where cn vanishes.
    """
    u = require_finite("argument u", u)
    mod = as_modulus(k)
    a_seq, c_seq = _agm_table(mod.k, mod.kc)
    quarter = math.pi / (2.0 * a_seq[-1])
    u = math.fmod(u, 4.0 * quarter)

    n = len(a_seq) - 1
    phi = (2.0 ** n) * a_seq[n] * u
    for i in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(c_seq[i] / a_seq[i] * math.sin(phi)))

    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(mod.kc * mod.kc + mod.k * mod.k * cn * cn)
    return JacobiTriple(sn=sn, cn=cn, dn=dn)


def jacobi_dc(u: float, k: ModulusLike) -> float:
    """dc = dn/cn; raises PoleError where cn vanishes (u ≡ K mod 2K)."""
    t = jacobi_sncndn(u, k)
    if abs(t.cn) <= POLE_TOL:
        raise PoleError("dc", u)
    return t.dn / t.cn


def jacobi_cd(u: float, k: ModulusLike) -> float:
    """cd = cn/dn, the reciprocal of dc; finite for every real u."""
    t = jacobi_sncndn(u, k)
    return t.cn / t.dn


def jacobi_sc(u: float, k: ModulusLike) -> float:
    """sc = sn/cn; raises PoleError where cn vanishes."""
    t = jacobi_sncndn(u, k)
    if abs(t.cn) <= POLE_TOL:
        raise PoleError("sc", u)
    return t.sn / t.cn


def jacobi_cs(u: float, k: ModulusLike) -> float:
    """cs = cn/sn, the reciprocal of sc; raises PoleError where sn vanishes."""
    t = jacobi_sncndn(u, k)
    if abs(t.sn) <= POLE_TOL:
        raise PoleError("cs", u)
    return t.cn / t.sn


# ── Weierstrass ℘ ──────────────────────────────────────────


def weierstrass_roots(inv: WeierstrassInvariants) -> tuple[float, ...]:
    """Real roots of 4s³ − g2·s − g3, largest first.

    Three roots (trigonometric form) when the discriminant is non-negative,
    otherwise the single real root from the stable Cardano form polished by
    one Newton step.
    """
    g2, g3 = inv.g2, inv.g3
    if g2 == 0.0 and g3 == 0.0:
        return (0.0, 0.0, 0.0)

    if inv.discriminant >= 0.0:
        r = math.sqrt(g2 / 3.0)
        arg = 3.0 * math.sqrt(3.0) * g3 / g2 ** 1.5
        phi = math.acos(max(-1.0, min(1.0, arg)))
        return tuple(r * math.cos((phi - 2.0 * math.pi * j) / 3.0) for j in range(3))

    # s³ + p·s + q with p = −g2/4, q = −g3/4
    Q = -g2 / 12.0
    R = g3 / 8.0
    D = Q ** 3 + R * R
    AD = math.copysign(math.cbrt(abs(R) + math.sqrt(D)), R)
    s = AD - Q / AD
    slope = 12.0 * s * s - g2
    if slope != 0.0:
        s -= (4.0 * s ** 3 - g2 * s - g3) / slope
    return (s,)


@dataclass(frozen=True)
class _Reduction:
    """℘ expressed through Jacobian functions of argument x·scale.

    ``three_real``: ℘ = e_low + (e_top − e_low)/sn²(v),          v = x·√(e_top − e_low)
    otherwise:     ℘ = e_top + H·cn²(w)/(sn²(w)·dn²(w)),         w = x·√H
    """

    three_real: bool
    e_top: float
    e_low: float
    H: float
    scale: float
    modulus: Modulus


@lru_cache(maxsize=256)
def _reduce(inv: WeierstrassInvariants) -> _Reduction:
    roots = weierstrass_roots(inv)
    if len(roots) == 3:
        e1, e2, e3 = roots
        spread = e1 - e3
        if spread <= 0.0:
            raise DegenerateLatticeError("triple root: ℘ = 1/x², no real lattice")
        m = max(0.0, (e2 - e3) / spread)
        mc = max(0.0, (e1 - e2) / spread)
        if mc <= POLE_TOL:
            raise DegenerateModulusError(
                f"℘ with invariants ({inv.g2}, {inv.g3}) has a double largest root"
            )
        modulus = Modulus(k=math.sqrt(m), kc=math.sqrt(mc))
        return _Reduction(True, e1, e3, 0.0, math.sqrt(spread), modulus)

    (e,) = roots
    H = math.sqrt(3.0 * e * e - inv.g2 / 4.0)
    ratio = 3.0 * e / (4.0 * H)
    modulus = Modulus(k=math.sqrt(max(0.0, 0.5 - ratio)), kc=math.sqrt(0.5 + ratio))
    return _Reduction(False, e, e, H, math.sqrt(H), modulus)


def weierstrass_p(x: float, inv: WeierstrassInvariants) -> float:
    """Real-branch ℘(x; g2, g3) ≥ e1 by reduction to Jacobian functions."""
    x = require_finite("argument x", x)
    if inv.g2 == 0.0 and inv.g3 == 0.0:
        if abs(x) <= POLE_TOL:
            raise PoleError("℘", x)
        return 1.0 / (x * x)

    red = _reduce(inv)
    t = jacobi_sncndn(x * red.scale, red.modulus)
    if abs(t.sn) <= POLE_TOL:
        raise PoleError("℘", x)
    if red.three_real:
        return red.e_low + (red.e_top - red.e_low) / (t.sn * t.sn)
    return red.e_top + red.H * t.cn * t.cn / (t.sn * t.sn * t.dn * t.dn)


def weierstrass_p_prime(x: float, inv: WeierstrassInvariants) -> float:
    """Analytic ℘′(x) from the same reduction as ``weierstrass_p``."""
    x = require_finite("argument x", x)
    if inv.g2 == 0.0 and inv.g3 == 0.0:
        if abs(x) <= POLE_TOL:
            raise PoleError("℘′", x)
        return -2.0 / x ** 3

    red = _reduce(inv)
    t = jacobi_sncndn(x * red.scale, red.modulus)
    if abs(t.sn) <= POLE_TOL:
        raise PoleError("℘′", x)
    if red.three_real:
        spread = red.e_top - red.e_low
        return -2.0 * spread * red.scale * t.cn * t.dn / t.sn ** 3
    k2 = red.modulus.k ** 2
    inner = t.dn ** 2 - k2 * t.sn ** 2 * t.cn ** 2
    return -2.0 * red.H * red.scale * t.cn * inner / (t.sn * t.dn) ** 3


def weierstrass_signed_reciprocal(
    x: float,
    inv: WeierstrassInvariants,
    shift: float,
) -> tuple[float, float]:
    """Z = σ(x)/√(℘(x) − shift) and dZ/dx, finite through the lattice.

    σ is +1 on (0, 2ω) and alternates from one lattice cell to the next, so Z
    is smooth and changes sign exactly at the poles of ℘.  Requires
    shift < e1 so that ℘ − shift stays positive.
    """
    x = require_finite("argument x", x)
    red = _reduce(inv)
    if not shift < red.e_top:
        raise DomainError(f"shift {shift!r} must be below the largest root {red.e_top!r}")

    t = jacobi_sncndn(x * red.scale, red.modulus)
    if red.three_real:
        spread = red.e_top - red.e_low
        G = spread + (red.e_low - shift) * t.sn * t.sn
        Z = t.sn / math.sqrt(G)
        dZ = red.scale * spread * t.cn * t.dn / G ** 1.5
        return Z, dZ

    k2 = red.modulus.k ** 2
    sd = t.sn * t.dn
    G = (red.e_top - shift) * sd * sd + red.H * t.cn * t.cn
    Z = sd / math.sqrt(G)
    inner = t.dn ** 2 - k2 * t.sn ** 2 * t.cn ** 2
    dZ = red.scale * red.H * t.cn * inner / G ** 1.5
    return Z, dZ


def weierstrass_real_period(inv: WeierstrassInvariants) -> float:
    """Fundamental real period 2ω of ℘ along the real axis."""
    if inv.discriminant == 0.0:
        raise DegenerateLatticeError(
            f"discriminant of ({inv.g2}, {inv.g3}) is zero; the lattice degenerates"
        )
    red = _reduce(inv)
    return 2.0 * complete_K(red.modulus) / red.scale
