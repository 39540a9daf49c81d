"""Closed-form inverses built on the two W branches.

Moyal function
    ``M(x) = exp(-(x + exp(-x)) / 2)`` peaks at ``M(0) = exp(-1/2)``. Its two
    preimages of a level ``y`` are ``W(-y^2) - 2 ln y`` with the principal
    branch giving the right side (``x >= 0``) and the lower branch the left.

Gaisser-Hillas profile
    ``G(X) = ((X - X0)/(Xmax - X0))^((Xmax - X0)/lambda) exp((Xmax - X)/lambda)``.
    Rescaling by ``x = (X - X0)/lambda`` leaves the one-parameter
    ``g(x; xmax) = (x/xmax)^xmax exp(xmax - x)``, whose level set ``g = a``
    is ``x = -xmax W(-a^(1/xmax)/e)``: the principal branch gives the root
    before the maximum, the lower branch the one after it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .branch import Branch, DomainError
from .core import lambert_w_exp_arg

__all__ = [
    "MOYAL_PEAK",
    "Side",
    "GaisserHillasParams",
    "moyal",
    "moyal_inverse",
    "gh_reduced",
    "gh_reduced_inverse",
    "gh_full",
    "gh_full_inverse",
]

MOYAL_PEAK = math.exp(-0.5)


class Side(enum.Enum):
    """Which Moyal preimage to return. ``PLUS`` is ``x >= 0``."""

    PLUS = Branch.PRINCIPAL
    MINUS = Branch.MINUS1


def moyal(x: float) -> float:
    if x < -700.0:
        # exp(-x) overflows long before the result leaves zero
        return 0.0
    return math.exp(-0.5 * (x + math.exp(-x)))


def moyal_inverse(y: float, side: Side | str = Side.PLUS) -> float:
    """Preimage of ``y`` under :func:`moyal` on the requested side of the peak.

    ``0 < y <= exp(-1/2)``; one ulp above the peak is tolerated.
    """
    if isinstance(side, str):
        side = Side[side.upper()]
    if not y > 0.0:
        raise DomainError(f"Moyal inverse needs y > 0, got {y!r}")
    if y > MOYAL_PEAK:
        if y > MOYAL_PEAK + math.ulp(MOYAL_PEAK):
            raise DomainError(f"Moyal inverse needs y <= exp(-1/2), got {y!r}")
        y = MOYAL_PEAK
    log_y = math.log(y)
    # -y^2 = -exp(d - 1) with d = 2 ln y + 1, which keeps the peak region sharp
    return lambert_w_exp_arg(side.value, min(0.0, 2.0 * log_y + 1.0)) - 2.0 * log_y


@dataclass(frozen=True)
class GaisserHillasParams:
    """Shower profile parameters; depths in g/cm^2."""

    X0: float
    Xmax: float
    lam: float

    def __post_init__(self):
        if not self.lam > 0:
            raise DomainError(f"interaction length must be positive, got {self.lam!r}")
        if not self.Xmax > self.X0:
            raise DomainError(f"need Xmax > X0, got Xmax={self.Xmax!r}, X0={self.X0!r}")

    @property
    def x_max(self) -> float:
        return (self.Xmax - self.X0) / self.lam

    def rescale(self, X: float) -> float:
        return (X - self.X0) / self.lam


def gh_reduced(x: float, x_max: float) -> float:
    """One-parameter profile ``(x/x_max)^x_max exp(x_max - x)``, maximal (=1) at ``x_max``."""
    if not x_max > 0:
        raise DomainError(f"x_max must be positive, got {x_max!r}")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x!r}")
    return math.exp(x_max * math.log(x / x_max) + (x_max - x))


def gh_reduced_inverse(a: float, x_max: float) -> tuple[float, float]:
    """Both solutions of ``gh_reduced(x, x_max) = a`` for ``0 < a <= 1``.

    Returns
    -------
    (x_left, x_right)
        ``x_left <= x_max <= x_right``, equal only for ``a = 1``.
    """
    if not x_max > 0:
        raise DomainError(f"x_max must be positive, got {x_max!r}")
    if not 0 < a <= 1:
        raise DomainError(f"level must lie in (0, 1], got {a!r}")
    # the argument is -a^(1/x_max)/e = -exp(d - 1); passing d keeps both
    # tiny a and a next to 1 accurate
    d = math.log(a) / x_max
    left = -x_max * lambert_w_exp_arg(Branch.PRINCIPAL, d)
    right = -x_max * lambert_w_exp_arg(Branch.MINUS1, d)
    return left, right


def gh_full(X: float, params: GaisserHillasParams) -> float:
    """Three-parameter profile, normalised to 1 at ``Xmax``."""
    if not X > params.X0:
        raise DomainError(f"depth must exceed X0 = {params.X0!r}, got {X!r}")
    return gh_reduced(params.rescale(X), params.x_max)


def gh_full_inverse(a: float, params: GaisserHillasParams) -> tuple[float, float]:
    """Depths before and after the maximum where the profile equals ``a``."""
    left, right = gh_reduced_inverse(a, params.x_max)
    return params.X0 + params.lam * left, params.X0 + params.lam * right
