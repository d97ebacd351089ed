"""Rendering helpers shared by the CLI commands.

Human output goes through Rich panels and tables; ``--json`` output goes
through ``to_jsonable`` so dataclasses, numpy scalars and non-finite floats
serialize cleanly.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, is_dataclass
from enum import Enum
from typing import Any

import numpy as np
from rich.console import Console
from rich.panel import Panel

from ..models import REGIMES, Regime


def to_jsonable(value: Any) -> Any:
    """Recursively convert dataclasses, enums and numpy values to JSON types."""
    if isinstance(value, Enum):
        return value.value
    if is_dataclass(value) and not isinstance(value, type):
        return {k: to_jsonable(v) for k, v in asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def print_json(payload: Any) -> None:
    print(json.dumps(to_jsonable(payload), indent=2))


def fmt(x: float, digits: int = 12) -> str:
    return f"{x:.{digits}g}"


def print_panel(title: str, rows: list[tuple[str, str]], regime: Regime | None = None) -> None:
    """One Rich panel of ``label: value`` lines, bordered in the regime's color."""
    console = Console()
    width = max((len(label) for label, _ in rows), default=0)
    body = "\n".join(f"  [bold]{label:<{width}}[/bold]  {value}" for label, value in rows)
    color = REGIMES[regime].color if regime is not None else "white"
    console.print(Panel(body or "[dim]No data[/dim]", title=title, border_style=color))
