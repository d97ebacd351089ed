"""``verify`` and ``lambda``: acceptance checks and the discrete scaling map."""

from __future__ import annotations

import asyncio
import math
import sys

import numpy as np
from rich.console import Console
from rich.table import Table

from ..config import VerifyConfig
from ..families import scaling_lambda, scaling_parity
from ..models import CheckResult, SolutionParams
from ..runner import scaling_deviation, verify_all
from .report import fmt, print_json, print_panel


def run_verify(cfg: VerifyConfig, grid: list[float] | None = None) -> list[CheckResult]:
    return asyncio.run(verify_all(grid if grid is not None else cfg.grid, cfg))


def cmd_verify(cfg: VerifyConfig, grid: list[float] | None = None, json_output: bool = False) -> int:
    """Print the report and return the exit code: 0 iff every check passed."""
    results = run_verify(cfg, grid)
    ok = bool(results) and all(r.passed for r in results)

    if json_output:
        print_json([r.to_dict() for r in results])
        return 0 if ok else 1

    table = Table(title="Verification", show_lines=False)
    table.add_column("check")
    table.add_column("family")
    table.add_column("C", justify="right")
    table.add_column("value", justify="right")
    table.add_column("threshold", justify="right")
    table.add_column("result")
    for r in results:
        value = fmt(r.value, 3) if math.isfinite(r.value) else "—"
        status = "[green]PASS[/green]" if r.passed else f"[red]FAIL[/red] {r.error or ''}".rstrip()
        table.add_row(r.check, r.family, fmt(r.C), value, fmt(r.threshold, 3), status)

    console = Console()
    console.print(table)
    failed = sum(1 for r in results if not r.passed)
    if ok:
        console.print(f"[green]All {len(results)} checks passed.[/green]")
    else:
        console.print(f"[red]{failed} of {len(results)} checks failed.[/red]")
    return 0 if ok else 1


def lambda_report(C: float, m: int, cfg: VerifyConfig) -> dict:
    lam = scaling_lambda(C, m)
    params = SolutionParams.for_constant(C)
    grid = np.geomspace(cfg.xi_min, cfg.xi_max, cfg.points)
    return {
        "C": C,
        "m": m,
        "lambda": lam,
        "parity": scaling_parity(params, m),
        "deviation": scaling_deviation(params, m, grid),
    }


def cmd_lambda(C: float, m: int, cfg: VerifyConfig, json_output: bool = False) -> None:
    report = lambda_report(C, m, cfg)
    if json_output:
        print_json(report)
        return
    params = SolutionParams.for_constant(C)
    print_panel(
        f"Scaling  C = {fmt(C)}, m = {m}",
        [
            ("λ", fmt(report["lambda"], 17)),
            ("Parity", f"{report['parity']:+d}"),
            ("Max deviation", fmt(report["deviation"], 3)),
        ],
        params.family,
    )
    if report["deviation"] > cfg.thresholds["scaling"]:
        print(
            f"lanemden: fixed-point deviation {report['deviation']:.3g} exceeds "
            f"{cfg.thresholds['scaling']:.3g}",
            file=sys.stderr,
        )
