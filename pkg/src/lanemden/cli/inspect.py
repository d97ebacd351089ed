"""``classify`` and ``roots``: what the constant C implies."""

from __future__ import annotations

import math

from ..elliptic import weierstrass_real_period, weierstrass_roots
from ..errors import LaneEmdenError
from ..factor import band, cardano_roots, classify, positive_root_f, solution_regime
from ..families import jacobian_constants, log_scale_period
from ..models import REGIMES, Regime, WeierstrassInvariants
from ..oracle import sextic_roots_oracle
from .report import fmt, print_json, print_panel


def classify_report(C: float) -> dict:
    """Regime plus the factorization data that applies to it."""
    regime = classify(C)
    solved = solution_regime(C)
    meta = REGIMES[solved]
    report: dict = {
        "C": C,
        "regime": regime.value,
        "solution_family": solved.value,
        "name": meta.name,
        "range": meta.constant_range,
    }
    if regime is Regime.NO_REAL_SOLUTION:
        return report

    report["band"] = list(band(C))
    if solved in (Regime.DC_FAMILY, Regime.SC_FAMILY):
        jc = jacobian_constants(C)
        report["roots"] = {"a": jc.roots.a, "b": jc.roots.b, "c": jc.roots.c}
        report["k"] = jc.modulus.k
        report["k_complement"] = jc.modulus.kc
        report["K"] = jc.K
    elif regime in (Regime.DC_FAMILY, Regime.SC_FAMILY):
        r = cardano_roots(C)
        report["roots"] = {"a": r.a, "b": r.b, "c": r.c}

    if C >= 2.0 - 1e-12:
        report["f"] = positive_root_f(max(C, 2.0)).f

    if C > 0.0 and regime is not Regime.SCHUSTER:
        inv = WeierstrassInvariants.from_constant(C)
        weier: dict = {
            "g2": inv.g2,
            "g3": inv.g3,
            "discriminant": inv.discriminant,
            "roots": list(weierstrass_roots(inv)),
        }
        try:
            weier["real_period"] = weierstrass_real_period(inv)
        except LaneEmdenError:
            weier["real_period"] = None
        report["weierstrass"] = weier

    try:
        period = log_scale_period(C)
        report["log_lambda"] = period
        report["lambda"] = math.exp(period)
    except LaneEmdenError:
        pass
    return report


def cmd_classify(C: float, json_output: bool = False) -> None:
    report = classify_report(C)
    if json_output:
        print_json(report)
        return

    rows: list[tuple[str, str]] = [
        ("Regime", report["regime"]),
        ("Range", report["range"]),
    ]
    if report["solution_family"] != report["regime"]:
        rows.append(("Evaluated as", report["solution_family"]))
    if report["regime"] == Regime.NO_REAL_SOLUTION.value:
        rows.append(("Solutions", "[red]there are no real solutions[/red]"))
    if "band" in report:
        lo, hi = report["band"]
        rows.append(("z² band", f"[{fmt(lo)}, {fmt(hi)}]"))
    if "roots" in report:
        r = report["roots"]
        rows.append(("(a, b, c)", f"({fmt(r['a'])}, {fmt(r['b'])}, {fmt(r['c'])})"))
    if "k" in report:
        rows.append(("Modulus k", fmt(report["k"], 15)))
        rows.append(("K(k)", fmt(report["K"], 15)))
    if "f" in report:
        rows.append(("f", fmt(report["f"], 15)))
    if "weierstrass" in report:
        w = report["weierstrass"]
        rows.append(("(g2, g3)", f"({fmt(w['g2'])}, {fmt(w['g3'])})"))
        rows.append(("Discriminant", fmt(w["discriminant"])))
        if w["real_period"] is not None:
            rows.append(("Real period 2ω", fmt(w["real_period"], 15)))
    if "lambda" in report:
        rows.append(("λ(m=1)", fmt(report["lambda"], 15)))

    regime = Regime(report["solution_family"])
    print_panel(f"C = {fmt(C)}  {report['name']}", rows, regime)


def roots_report(C: float) -> dict:
    """Factorization roots in z next to the brute-force sextic roots."""
    report = classify_report(C)
    brute = sextic_roots_oracle(C)
    factored: list[float] = []
    regime = classify(C)
    if regime is Regime.DC_FAMILY:
        r = cardano_roots(C)
        factored = [-math.sqrt(r.b), -math.sqrt(r.a), math.sqrt(r.a), math.sqrt(r.b)]
    elif regime is Regime.SC_FAMILY:
        c = math.sqrt(cardano_roots(C).c)
        factored = [-c, c]
    elif regime in (Regime.SRIVASTAVA, Regime.WEIERSTRASS_FAMILY):
        f = math.sqrt(positive_root_f(max(C, 2.0)).f)
        factored = [-f, f]
    elif regime is Regime.SINGULAR_FIXED_POINT:
        factored = [-1.0, 1.0]
    elif regime is Regime.SCHUSTER:
        s = 3.0 ** 0.25
        factored = [-s, 0.0, s]
    report["factored_roots"] = factored
    report["oracle_roots"] = brute
    if len(factored) == len(brute):
        report["max_deviation"] = max((abs(x - y) for x, y in zip(factored, brute)), default=0.0)
    else:
        report["max_deviation"] = None
    return report


def cmd_roots(C: float, json_output: bool = False) -> None:
    report = roots_report(C)
    if json_output:
        print_json(report)
        return

    def listing(xs: list[float]) -> str:
        return ", ".join(fmt(x, 15) for x in xs) if xs else "[dim]none[/dim]"

    rows = [
        ("Regime", report["regime"]),
        ("Factorization", listing(report["factored_roots"])),
        ("Bisection", listing(report["oracle_roots"])),
    ]
    dev = report["max_deviation"]
    rows.append(("Max deviation", fmt(dev, 3) if dev is not None else "[red]root count differs[/red]"))
    print_panel(f"Roots of −z⁶ + 3z² + {fmt(C)}", rows, Regime(report["solution_family"]))
