"""Configuration file handling for lanemden.

Config lives at ~/.config/lanemden/settings.json (XDG).  Every key is
optional; missing keys take the defaults below.

Example config:
{
  "sample": { "xi_min": 0.05, "xi_max": 20, "points": 400, "log_spacing": true },
  "verify": {
    "grid": [-2, -1.9, -1.5, -1, -0.5, 0, 0.5, 1, 1.5, 2, 2.5, 3, 3.5, 10],
    "xi_min": 0.1, "xi_max": 10, "points": 200,
    "thresholds": { "residual": 1e-7, "energy": 1e-9 }
  }
}

The LE_VERIFY_TOL environment variable adjusts thresholds at run time:
a bare number scales all of them, ``name=value,...`` replaces named ones.
"""

from __future__ import annotations

import json
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .helpers import config_dir, debug_log

DEFAULT_GRID: tuple[float, ...] = (
    -2.0, -1.9, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 10.0,
)

DEFAULT_THRESHOLDS: dict[str, float] = {
    "residual": 1e-7,
    "energy": 1e-9,
    "band": 1e-12,
    "scaling": 1e-9,
    "oracle": 1e-6,
    "equivalence": 1e-8,
}


def _warn(message: str) -> None:
    print(f"lanemden: {message}", file=sys.stderr)
    debug_log("config", "warning", message=message)


def _clamp(value: object, lo: float, hi: float, default: float) -> float:
    try:
        x = float(value)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        return default
    if not math.isfinite(x):
        return default
    return max(lo, min(hi, x))


@dataclass
class SampleConfig:
    """Defaults for ``sample`` and ``figure``."""

    xi_min: float = 0.05
    xi_max: float = 20.0
    points: int = 400
    log_spacing: bool = True

    MIN_POINTS = 2
    MAX_POINTS = 100_000

    @classmethod
    def from_dict(cls, d: dict) -> "SampleConfig":
        base = cls()
        xi_min = _clamp(d.get("xi_min", base.xi_min), 1e-12, 1e12, base.xi_min)
        xi_max = _clamp(d.get("xi_max", base.xi_max), 1e-12, 1e12, base.xi_max)
        if not xi_max > xi_min:
            _warn(f"sample.xi_max ({xi_max}) must exceed xi_min ({xi_min}), using defaults")
            xi_min, xi_max = base.xi_min, base.xi_max
        points = int(_clamp(d.get("points", base.points), cls.MIN_POINTS, cls.MAX_POINTS, base.points))
        log_spacing = d.get("log_spacing", base.log_spacing)
        if not isinstance(log_spacing, bool):
            _warn(f"sample.log_spacing has non-bool value {log_spacing!r}, using true")
            log_spacing = True
        return cls(xi_min=xi_min, xi_max=xi_max, points=points, log_spacing=log_spacing)

    def to_dict(self) -> dict:
        return {
            "xi_min": self.xi_min,
            "xi_max": self.xi_max,
            "points": self.points,
            "log_spacing": self.log_spacing,
        }


@dataclass
class VerifyConfig:
    """C grid, ξ range and pass thresholds for ``verify``."""

    grid: list[float] = field(default_factory=lambda: list(DEFAULT_GRID))
    xi_min: float = 0.1
    xi_max: float = 10.0
    points: int = 200
    thresholds: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_THRESHOLDS))

    @classmethod
    def from_dict(cls, d: dict) -> "VerifyConfig":
        base = cls()
        grid = base.grid
        raw_grid = d.get("grid")
        if raw_grid is not None:
            try:
                grid = [float(c) for c in raw_grid]
            except (TypeError, ValueError):
                _warn(f"verify.grid must be a list of numbers, got {raw_grid!r}")
                grid = base.grid
            if not grid or not all(math.isfinite(c) for c in grid):
                _warn("verify.grid is empty or non-finite, using the default grid")
                grid = base.grid

        xi_min = _clamp(d.get("xi_min", base.xi_min), 1e-6, 1e6, base.xi_min)
        xi_max = _clamp(d.get("xi_max", base.xi_max), 1e-6, 1e6, base.xi_max)
        if not xi_max > xi_min:
            _warn(f"verify.xi_max ({xi_max}) must exceed xi_min ({xi_min}), using defaults")
            xi_min, xi_max = base.xi_min, base.xi_max
        points = int(_clamp(d.get("points", base.points), 2, 10_000, base.points))

        thresholds = dict(DEFAULT_THRESHOLDS)
        for key, value in (d.get("thresholds") or {}).items():
            if key not in DEFAULT_THRESHOLDS:
                _warn(f"ignoring unknown threshold {key!r}")
                continue
            thresholds[key] = _clamp(value, 0.0, 1.0, DEFAULT_THRESHOLDS[key])
        return cls(grid=grid, xi_min=xi_min, xi_max=xi_max, points=points, thresholds=thresholds)

    def to_dict(self) -> dict:
        return {
            "grid": list(self.grid),
            "xi_min": self.xi_min,
            "xi_max": self.xi_max,
            "points": self.points,
            "thresholds": dict(self.thresholds),
        }

    def with_env_overrides(self, raw: str | None = None) -> "VerifyConfig":
        """Copy with LE_VERIFY_TOL applied (pass *raw* to bypass the environment)."""
        if raw is None:
            raw = os.environ.get("LE_VERIFY_TOL", "")
        raw = raw.strip()
        if not raw:
            return self
        thresholds = dict(self.thresholds)

        if "=" not in raw:
            try:
                factor = float(raw)
            except ValueError:
                factor = math.nan
            if not (math.isfinite(factor) and factor > 0.0):
                _warn(f"LE_VERIFY_TOL={raw!r} is not a positive number, ignoring")
                return self
            thresholds = {k: v * factor for k, v in thresholds.items()}
        else:
            for item in raw.split(","):
                name, _, value = item.partition("=")
                name = name.strip()
                if name not in thresholds:
                    _warn(f"LE_VERIFY_TOL names unknown threshold {name!r}, ignoring it")
                    continue
                try:
                    thresholds[name] = float(value)
                except ValueError:
                    _warn(f"LE_VERIFY_TOL value for {name!r} is not a number: {value!r}")

        return VerifyConfig(
            grid=list(self.grid),
            xi_min=self.xi_min,
            xi_max=self.xi_max,
            points=self.points,
            thresholds=thresholds,
        )


@dataclass
class AppConfig:
    """Top-level application configuration."""

    sample: SampleConfig = field(default_factory=SampleConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)

    @classmethod
    def from_dict(cls, d: dict) -> "AppConfig":
        return cls(
            sample=SampleConfig.from_dict(d.get("sample") or {}),
            verify=VerifyConfig.from_dict(d.get("verify") or {}),
        )

    @classmethod
    def default(cls) -> "AppConfig":
        return cls()

    def to_dict(self) -> dict:
        return {"sample": self.sample.to_dict(), "verify": self.verify.to_dict()}


def config_path() -> Path:
    """Return the config file path, preferring XDG."""
    return config_dir("settings.json")


def load_config() -> AppConfig:
    """Load config from disk, or return defaults if no file exists."""
    path = config_path()
    if not path.exists():
        return AppConfig.default()

    try:
        data = json.loads(path.read_text())
        if not isinstance(data, dict):
            raise TypeError(f"top level must be an object, got {type(data).__name__}")
        return AppConfig.from_dict(data)
    except (json.JSONDecodeError, AttributeError, TypeError, ValueError, OSError) as e:
        _warn(f"bad config ({path}): {e}, using defaults")
        return AppConfig.default()


def init_config() -> None:
    """Write the default config file unless one already exists."""
    path = config_path()
    if path.exists():
        print(f"Config already exists: {path}")
        return

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(AppConfig.default().to_dict(), indent=2) + "\n")
    print(f"Created config: {path}")
