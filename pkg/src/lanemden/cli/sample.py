"""``eval``, ``sample`` and ``figure``: numbers out of the closed forms."""

from __future__ import annotations

import asyncio
import csv
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .. import __version__
from ..errors import DomainError
from ..families import calibrate_B, evaluate
from ..helpers import xi_grid
from ..models import SampleTable, SolutionParams, format_number
from .report import fmt, print_json, print_panel

# Curves pass through (ξ, θ) = (1/2, 1), where the singular solution sits
FIGURE1_XI = 0.5
FIGURE1_Z = 1.0

FIGURE_CONSTANTS: dict[int, tuple[float, ...]] = {
    1: (-2.0, -1.5, -1.0, -0.5),
    2: (0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5),
}


def cmd_eval(params: SolutionParams, xi: float, json_output: bool = False) -> None:
    s = evaluate(params, xi)
    if json_output:
        print_json({"family": params.family, "C": params.C, "B": params.B, "branch": params.branch, **vars(s)})
        return
    print_panel(
        f"{params.meta.name}  C = {fmt(params.C)}",
        [
            ("ξ", format_number(s.xi)),
            ("θ", format_number(s.theta)),
            ("dθ/dξ", format_number(s.dtheta)),
            ("B", format_number(params.B)),
        ],
        params.family,
    )


def sample_table(
    params: SolutionParams,
    xi_min: float,
    xi_max: float,
    n: int,
    log_spacing: bool = True,
) -> SampleTable:
    rows = [evaluate(params, float(x)) for x in xi_grid(xi_min, xi_max, n, log_spacing)]
    meta = {
        "family": params.family.value,
        "C": format_number(params.C),
        "B": format_number(params.B),
        "branch": str(params.branch),
        "version": f"lanemden {__version__}",
    }
    return SampleTable(meta=meta, rows=rows)


def _open_output(output: Path | None) -> TextIO:
    if output is None:
        return sys.stdout
    return output.open("w", encoding="utf-8", newline="")


def cmd_sample(
    params: SolutionParams,
    xi_min: float,
    xi_max: float,
    n: int,
    log_spacing: bool = True,
    output: Path | None = None,
) -> None:
    table = sample_table(params, xi_min, xi_max, n, log_spacing)
    stream = _open_output(output)
    try:
        table.write_csv(stream)
    finally:
        if output is not None:
            stream.close()
    if output is not None:
        print(f"Wrote {len(table.rows)} rows to {output}", file=sys.stderr)


# ── Figures ────────────────────────────────────────────────


@dataclass
class FigureData:
    """One ξ column shared by several θ curves."""

    figure: int
    curves: list[SolutionParams]
    xi: list[float]
    columns: list[list[float]]

    def write_csv(self, stream: TextIO) -> None:
        stream.write(f"# figure: {self.figure}\n")
        stream.write(f"# version: lanemden {__version__}\n")
        for p in self.curves:
            stream.write(
                f"# curve: C={format_number(p.C)} family={p.family.value} "
                f"B={format_number(p.B)} branch={p.branch}\n"
            )
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["xi", *(f"C={format_number(p.C)}" for p in self.curves)])
        for i, x in enumerate(self.xi):
            writer.writerow([format_number(x), *(format_number(col[i]) for col in self.columns)])


def figure_curves(figure: int) -> list[SolutionParams]:
    """Figure 1 pins every curve to (1/2, 1); figure 2 uses B = 1."""
    if figure not in FIGURE_CONSTANTS:
        raise DomainError(f"unknown figure {figure!r}")
    curves = []
    for C in FIGURE_CONSTANTS[figure]:
        B = 1.0
        if figure == 1 and C != -2.0:
            B = calibrate_B(C, FIGURE1_XI, FIGURE1_Z)
        curves.append(SolutionParams.for_constant(C, B=B))
    return curves


async def _columns(curves: list[SolutionParams], xs: list[float]) -> list[list[float]]:
    def column(p: SolutionParams) -> list[float]:
        return [evaluate(p, x).theta for x in xs]

    return list(await asyncio.gather(*(asyncio.to_thread(column, p) for p in curves)))


def figure_data(figure: int, xi_min: float, xi_max: float, n: int) -> FigureData:
    curves = figure_curves(figure)
    xs = [float(x) for x in xi_grid(xi_min, xi_max, n, log_spacing=True)]
    return FigureData(figure=figure, curves=curves, xi=xs, columns=asyncio.run(_columns(curves, xs)))


def cmd_figure(
    figure: int,
    xi_min: float,
    xi_max: float,
    n: int,
    output: Path | None = None,
) -> None:
    data = figure_data(figure, xi_min, xi_max, n)
    stream = _open_output(output)
    try:
        data.write_csv(stream)
    finally:
        if output is not None:
            stream.close()
    if output is not None:
        print(f"Wrote figure {figure} ({len(data.curves)} curves) to {output}", file=sys.stderr)
