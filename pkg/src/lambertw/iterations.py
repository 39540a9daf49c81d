"""Refinement steps for ``w exp(w) = x`` and the drivers that repeat them.

A step function has the signature ``step(x, w) -> (w_next, terms)``; the
terms are the intermediate quantities of the update, kept for
instrumentation. :func:`halley_step` is third order, :func:`fritsch_step`
is fourth order.

Both steps take optional ``exp``/``log`` callables so the same update can be
run in higher precision (e.g. with :mod:`mpmath`) when measuring
convergence order.
"""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .branch import DegenerateStep, SingularStep

__all__ = [
    "HalleyTerms",
    "FritschTerms",
    "IterationConfig",
    "ConvergenceWarning",
    "halley_step",
    "fritsch_step",
    "iterate",
    "iterate_fixed",
]


_TINY = sys.float_info.min


class HalleyTerms(NamedTuple):
    t: float  # w e^w - x
    s: float  # (w + 2) / (2 (w + 1))
    u: float  # (w + 1) e^w


class FritschTerms(NamedTuple):
    z: float  # ln(x / w) - w
    q: float  # 2 (1 + w) (1 + w + 2z/3)
    eps: float  # relative update


class ConvergenceWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class IterationConfig:
    tolerance: float = 1e-6
    max_iterations: int = 100

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")


Step = Callable[[float, float], tuple]


def halley_step(x, w, *, exp=math.exp):
    """One Halley update ``w + t / (t s - u)``.

    Evaluated in the single-exponential form
    ``w - t / (e^w (w+1) - (w+2) t / (2(w+1)))``.

    Raises
    ------
    SingularStep
        If ``w == -1``.
    """
    w1 = w + 1
    if w1 == 0:
        raise SingularStep("Halley step is singular at w = -1")
    ew = exp(w)
    t = w * ew - x
    u = ew * w1
    s = (w + 2) / (2 * w1)
    return w - t / (u - (w + 2) * t / (2 * w1)), HalleyTerms(t, s, u)


def fritsch_step(x, w, *, log=math.log):
    """One Fritsch update ``w (1 + eps)``.

    With ``z = ln(x/w) - w`` and ``q = 2(1+w)(1+w+2z/3)`` the relative update
    is ``eps = z/(1+w) * (q-z)/(q-2z)``. Needs ``w`` to share the sign of
    ``x``, which any same-branch estimate of ``W(x)`` does.

    Raises
    ------
    SingularStep
        If ``w`` is 0 or -1, or ``x / w <= 0``.
    DegenerateStep
        If ``q == 2z``.
    """
    if w == 0:
        raise SingularStep("Fritsch step is singular at w = 0")
    if not (x > 0 and w > 0 or x < 0 and w < 0):
        raise SingularStep(f"Fritsch step needs x/w > 0, got x={x!r}, w={w!r}")
    w1 = w + 1
    if w1 == 0:
        raise SingularStep("Fritsch step is singular at w = -1")
    ratio = x / w
    if ratio >= _TINY:
        z = log(ratio) - w
    else:
        # x/w underflows for subnormal x on the lower branch
        z = log(abs(x)) - log(abs(w)) - w
    q = 2 * w1 * (w1 + (2 / 3) * z)
    den = q - 2 * z
    if den == 0:
        raise DegenerateStep(f"Fritsch step degenerate at x={x!r}, w={w!r}")
    eps = z / w1 * (q - z) / den
    return w + w * eps, FritschTerms(z, q, eps)


def iterate(step: Step, x: float, w0: float, config: IterationConfig | None = None) -> float:
    """Repeat ``step`` until successive iterates differ by at most the tolerance.

    On hitting ``max_iterations`` a :class:`ConvergenceWarning` is issued and
    the last iterate is returned.
    """
    config = config or IterationConfig()
    w = w0
    for _ in range(config.max_iterations):
        ww = step(x, w)[0]
        if abs(ww - w) <= config.tolerance:
            return ww
        w = ww
    warnings.warn(
        f"convergence not reached after {config.max_iterations} iterations (x={x!r})",
        ConvergenceWarning,
        stacklevel=2,
    )
    return w


def iterate_fixed(step: Step, x: float, w0: float, n: int) -> float:
    """Apply ``step`` exactly ``n`` times; ``n = 0`` returns ``w0``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    w = w0
    for _ in range(n):
        w = step(x, w)[0]
    return w
