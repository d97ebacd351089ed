"""Closed-form solution families of the n=5 Lane–Emden equation."""

from .base import SolutionFamily
from .classical import schuster, singular, srivastava
from .jacobian import JacobianConstants, jacobian_constants
from .registry import (
    FAMILIES,
    apply_scaling,
    calibrate_B,
    dc_family,
    evaluate,
    family_for,
    log_scale_period,
    sc_family,
    scaling_lambda,
    scaling_parity,
    weier_family,
)
from .weierstrass import gh_constant, goenner_havas

__all__ = [
    "FAMILIES",
    "JacobianConstants",
    "SolutionFamily",
    "apply_scaling",
    "calibrate_B",
    "dc_family",
    "evaluate",
    "family_for",
    "gh_constant",
    "goenner_havas",
    "jacobian_constants",
    "log_scale_period",
    "sc_family",
    "scaling_lambda",
    "scaling_parity",
    "schuster",
    "singular",
    "srivastava",
    "weier_family",
]
