"""Data models for lanemden."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Iterable, TextIO

from .errors import DomainError


class Regime(StrEnum):
    """The seven cases of the integration constant C."""

    NO_REAL_SOLUTION = "no-real-solution"    # C < -2
    SINGULAR_FIXED_POINT = "singular"        # C = -2
    DC_FAMILY = "dc"                         # -2 < C < 0
    SCHUSTER = "schuster"                    # C = 0
    SC_FAMILY = "sc"                         # 0 < C < 2
    SRIVASTAVA = "srivastava"                # C = 2
    WEIERSTRASS_FAMILY = "weierstrass"       # C > 2


@dataclass(frozen=True)
class RegimeMeta:
    """Display metadata for a regime (single source of truth)."""

    regime: Regime
    name: str
    constant_range: str
    color: str
    has_scale: bool = True
    oscillating: bool = False


# Insertion order follows C from -∞ to +∞; reports list regimes in this order.
REGIMES: dict[Regime, RegimeMeta] = {
    Regime.NO_REAL_SOLUTION: RegimeMeta(
        Regime.NO_REAL_SOLUTION, "No real solution", "C < -2", "red", has_scale=False,
    ),
    Regime.SINGULAR_FIXED_POINT: RegimeMeta(
        Regime.SINGULAR_FIXED_POINT, "Singular fixed point", "C = -2", "bright_white",
        has_scale=False,
    ),
    Regime.DC_FAMILY: RegimeMeta(
        Regime.DC_FAMILY, "Jacobian dc family", "-2 < C < 0", "cyan",
    ),
    Regime.SCHUSTER: RegimeMeta(
        Regime.SCHUSTER, "Schuster–Emden", "C = 0", "green",
    ),
    Regime.SC_FAMILY: RegimeMeta(
        Regime.SC_FAMILY, "Jacobian sc family", "0 < C < 2", "yellow", oscillating=True,
    ),
    Regime.SRIVASTAVA: RegimeMeta(
        Regime.SRIVASTAVA, "Srivastava", "C = 2", "magenta", oscillating=True,
    ),
    Regime.WEIERSTRASS_FAMILY: RegimeMeta(
        Regime.WEIERSTRASS_FAMILY, "Weierstrass family", "C > 2", "blue", oscillating=True,
    ),
}


# ── Elliptic kernel types ──────────────────────────────────


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus k with its complement k' = √(1 − k²).

    Keeping k' separately avoids the cancellation in 1 − k² as k → 1.
    """

    k: float
    kc: float

    @classmethod
    def from_k(cls, k: float) -> "Modulus":
        return cls(k=k, kc=math.sqrt((1.0 - k) * (1.0 + k)))

    @property
    def m(self) -> float:
        """The parameter m = k² (never used in public signatures)."""
        return self.k * self.k


@dataclass(frozen=True)
class JacobiTriple:
    """sn, cn, dn at one argument."""

    sn: float
    cn: float
    dn: float


@dataclass(frozen=True)
class WeierstrassInvariants:
    """Invariants (g2, g3) of ℘ with the discriminant g2³ − 27·g3²."""

    g2: float
    g3: float
    discriminant: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "discriminant", self.g2 ** 3 - 27.0 * self.g3 ** 2)

    @classmethod
    def from_constant(cls, C: float) -> "WeierstrassInvariants":
        """Invariants (12, 4(C² − 2)) of the C > 0 solutions."""
        return cls(g2=12.0, g3=4.0 * (C * C - 2.0))

    def scaled(self, lam: float) -> "WeierstrassInvariants":
        """Invariants (λ⁻⁴g2, λ⁻⁶g3) of the homogeneity identity."""
        return WeierstrassInvariants(g2=self.g2 / lam ** 4, g3=self.g3 / lam ** 6)


# ── Factorization types ────────────────────────────────────


@dataclass(frozen=True)
class CardanoRoots:
    """Roots a < b < c of the cubic in u = z² for 0 < |C| < 2."""

    a: float
    b: float
    c: float
    C: float


@dataclass(frozen=True)
class DepressedRoot:
    """Positive root f = A + 1/A of u³ − 3u − C for C ≥ 2."""

    f: float
    A: float
    C: float


# ── Solutions ──────────────────────────────────────────────


@dataclass(frozen=True)
class SolutionParams:
    """A fully specified solution: regime, energy constant C, scale B, sign."""

    family: Regime
    C: float
    B: float = 1.0
    branch: int = 1

    def __post_init__(self) -> None:
        from .factor import solution_regime

        if self.branch not in (1, -1):
            raise DomainError(f"branch must be +1 or -1, got {self.branch!r}")
        if not (math.isfinite(self.B) and self.B > 0.0):
            raise DomainError(f"scale constant B must be positive, got {self.B!r}")
        expected = solution_regime(self.C)
        if expected is not self.family:
            raise DomainError(
                f"family {self.family.value!r} does not match C={self.C!r} "
                f"(expected {expected.value!r})"
            )

    @classmethod
    def for_constant(cls, C: float, B: float = 1.0, branch: int = 1) -> "SolutionParams":
        """Build params with the family implied by *C*."""
        from .factor import solution_regime

        return cls(family=solution_regime(C), C=C, B=B, branch=branch)

    @property
    def meta(self) -> RegimeMeta:
        return REGIMES[self.family]


@dataclass(frozen=True)
class Sample:
    """One evaluated point (ξ, θ, dθ/dξ)."""

    xi: float
    theta: float
    dtheta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta) and math.isfinite(self.dtheta)):
            raise DomainError(f"non-finite sample at xi={self.xi!r}")
        if not (math.isfinite(self.xi) and self.xi >= 0.0):
            raise DomainError(f"xi must be finite and non-negative, got {self.xi!r}")


@dataclass(frozen=True)
class PhasePoint:
    """State (t, z, dz/dt) of the autonomous form, t = −ln ξ, z = θ√(2ξ)."""

    t: float
    z: float
    dz: float


@dataclass
class Trajectory:
    """Integrated solution of the Lane–Emden ODE."""

    points: list[Sample]
    tolerance: float
    c_estimate: float
    c_start: float = math.nan
    truncated: bool = False

    @property
    def energy_drift(self) -> float:
        return abs(self.c_estimate - self.c_start)


# ── Reports ────────────────────────────────────────────────


@dataclass
class CheckResult:
    """Outcome of one verification check."""

    check: str
    family: str
    C: float
    value: float
    threshold: float
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and math.isfinite(self.value) and self.value <= self.threshold

    def to_dict(self) -> dict:
        d: dict = {
            "check": self.check,
            "family": self.family,
            "C": self.C,
            "value": self.value if math.isfinite(self.value) else None,
            "threshold": self.threshold,
            "pass": self.passed,
        }
        if self.error:
            d["error"] = self.error
        return d


_CSV_COLUMNS = ("xi", "theta", "dtheta")


def format_number(x: float) -> str:
    """17 significant digits, enough to round-trip any double."""
    return f"{x:.17g}"


@dataclass
class SampleTable:
    """Metadata header plus rows of (xi, theta, dtheta)."""

    meta: dict[str, str]
    rows: list[Sample] = field(default_factory=list)

    def __post_init__(self) -> None:
        for prev, cur in zip(self.rows, self.rows[1:]):
            if not cur.xi > prev.xi:
                raise DomainError(
                    f"rows must be strictly increasing in xi ({prev.xi!r} then {cur.xi!r})"
                )

    def write_csv(self, stream: TextIO) -> None:
        for key, value in self.meta.items():
            stream.write(f"# {key}: {value}\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for s in self.rows:
            writer.writerow([format_number(s.xi), format_number(s.theta), format_number(s.dtheta)])

    def to_csv(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, lines: str | Iterable[str]) -> "SampleTable":
        if isinstance(lines, str):
            lines = lines.splitlines()
        meta: dict[str, str] = {}
        body: list[str] = []
        for line in lines:
            if line.startswith("#"):
                key, _, value = line[1:].partition(":")
                meta[key.strip()] = value.strip()
            elif line.strip():
                body.append(line)
        reader = csv.reader(body)
        header = next(reader, None)
        if header is None or tuple(header) != _CSV_COLUMNS:
            raise DomainError(f"expected header {','.join(_CSV_COLUMNS)}, got {header!r}")
        rows = [Sample(float(x), float(t), float(d)) for x, t, d in reader]
        return cls(meta=meta, rows=rows)
