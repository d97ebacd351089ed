"""Shared helpers for lanemden: config location, debug log, finite differences."""

from __future__ import annotations

import json
import math
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable

import numpy as np

from .errors import DomainError


def config_dir(*parts: str) -> Path:
    """Return a path under the lanemden XDG config directory.

    >>> config_dir("settings.json")
    PosixPath('/home/user/.config/lanemden/settings.json')
    """
    xdg = os.environ.get("XDG_CONFIG_HOME", "")
    base = Path(xdg) if xdg else Path.home() / ".config"
    return base / "lanemden" / Path(*parts) if parts else base / "lanemden"


# ── Debug logging ─────────────────────────────────────────


def _debug_enabled() -> bool:
    """Return True if debug logging is enabled via env var."""
    raw = os.environ.get("LE_DEBUG", "").strip().lower()
    return raw in {"1", "true", "yes", "on"}


def _debug_log_path() -> Path:
    """Path to debug log file.

    Override with LE_DEBUG_LOG_PATH, otherwise defaults to
    ~/.config/lanemden/debug.log.
    """
    custom = os.environ.get("LE_DEBUG_LOG_PATH", "").strip()
    if custom:
        return Path(custom).expanduser()
    return config_dir("debug.log")


def debug_log(component: str, phase: str, **fields: Any) -> None:
    """Write one JSON log event when LE_DEBUG is set."""
    if not _debug_enabled():
        return

    event: dict[str, Any] = {
        "ts": datetime.now(timezone.utc).isoformat(),
        "component": component,
        "phase": phase,
    }
    event.update(fields)

    path = _debug_log_path()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd = os.open(path, os.O_WRONLY | os.O_CREAT | os.O_APPEND, 0o600)
        with os.fdopen(fd, "a", encoding="utf-8") as f:
            f.write(json.dumps(event, default=str) + "\n")
        try:
            path.chmod(0o600)
        except OSError:
            pass
    except OSError:
        # Debug logging must never break a computation.
        pass


# ── Numerics ──────────────────────────────────────────────


def require_finite(name: str, value: float) -> float:
    """Return *value* as float, raising DomainError if it is NaN or infinite."""
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def richardson_derivative(
    f: Callable[[float], float],
    x: float,
    h: float | None = None,
) -> float:
    """Central difference of *f* at *x* with one Richardson extrapolation.

    The default step is 1e-3·|x| (or 1e-3 at the origin); the combination
    (4·D(h/2) − D(h))/3 cancels the O(h²) term.
    """
    if h is None:
        h = 1e-3 * abs(x) if x != 0.0 else 1e-3

    def central(step: float) -> float:
        return (f(x + step) - f(x - step)) / (2.0 * step)

    return (4.0 * central(h / 2.0) - central(h)) / 3.0


def xi_grid(xi_min: float, xi_max: float, n: int, log_spacing: bool = True) -> np.ndarray:
    """Strictly increasing grid of *n* radii on [xi_min, xi_max]."""
    if n < 1:
        raise DomainError(f"need at least one grid point, got n={n}")
    if not xi_max > xi_min:
        raise DomainError(f"xi_max ({xi_max}) must exceed xi_min ({xi_min})")
    if n == 1:
        return np.array([float(xi_min)])
    if log_spacing:
        if xi_min <= 0.0:
            raise DomainError("log spacing needs xi_min > 0")
        return np.geomspace(xi_min, xi_max, n)
    return np.linspace(xi_min, xi_max, n)
