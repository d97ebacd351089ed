"""Exception hierarchy for lanemden.

Every error raised on purpose by the library derives from ``LaneEmdenError``
so the CLI can turn it into a one-line message.  The numeric kernel raises
``PoleError`` instead of returning infinities; callers that can evaluate
through a pole use the reciprocal functions instead.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .models import Sample


class LaneEmdenError(Exception):
    """Base class for all lanemden errors."""


class DomainError(LaneEmdenError, ValueError):
    """An argument lies outside the domain of the operation."""


class RegimeError(DomainError):
    """The integration constant C belongs to the wrong regime."""


class DegenerateModulusError(DomainError):
    """Elliptic modulus too close to 1 (C ≈ 0, use the Schuster family)."""


class DegenerateLatticeError(DomainError):
    """Weierstrass discriminant is zero (C = 2, use the Srivastava family)."""


class PoleError(LaneEmdenError, ArithmeticError):
    """Evaluation hit a pole of an elliptic function."""

    def __init__(self, function: str, argument: float) -> None:
        super().__init__(f"{function} has a pole at {argument!r}")
        self.function = function
        self.argument = argument


class ConvergenceError(LaneEmdenError, RuntimeError):
    """An iteration did not converge within its step cap."""


class IntegrationError(ConvergenceError):
    """The ODE integrator gave up; ``last_good`` is the last accepted point."""

    def __init__(self, message: str, last_good: "Sample | None" = None) -> None:
        super().__init__(message)
        self.last_good = last_good
