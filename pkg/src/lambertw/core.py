"""Branch-dispatched evaluation of the real Lambert W function.

``lambert_w`` picks an initial approximation accurate to about five decimal
places from a piecewise map and refines it with one Fritsch step, which is
enough for full double precision. Two guard bands skip the refinement:

* within ``1e-5`` above the branch point ``-1/e`` the order-5 branch-point
  series is returned as is;
* on the principal branch, for ``|x| <= 1e-6`` the rational fit is returned
  as is.

The lower branch at ``x = 0`` evaluates to ``-inf``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import NamedTuple

from . import approximations as _ap
from .branch import INV_E, Branch, DomainError, as_branch, check_branch_point
from .iterations import fritsch_step

__all__ = [
    "EvalResult",
    "PiecewiseRegionMap",
    "REGION_MAPS",
    "BRANCH_POINT_GUARD",
    "ZERO_GUARD",
    "initial_approximation",
    "lambert_w",
    "lambert_w_exp_arg",
    "lambertw",
    "in_guard_band",
]

BRANCH_POINT_GUARD = 1e-5
ZERO_GUARD = 1e-6


class EvalResult(NamedTuple):
    value: float
    refined: bool


@dataclass(frozen=True)
class PiecewiseRegionMap:
    """Breakpoints and the approximant used on each interval between them.

    Interval ``i`` is ``[breakpoints[i-1], breakpoints[i])`` with the domain
    bounds closing the first and last intervals.
    """

    branch: Branch
    lower: float
    upper: float
    breakpoints: tuple[float, ...]
    approximants: tuple[str, ...]

    def __post_init__(self):
        if len(self.approximants) != len(self.breakpoints) + 1:
            raise ValueError("need exactly one approximant per interval")
        edges = (self.lower, *self.breakpoints, self.upper)
        if any(b <= a for a, b in zip(edges, edges[1:])):
            raise ValueError("breakpoints must be strictly increasing inside the domain")

    def select(self, x: float) -> str:
        return self.approximants[bisect.bisect_right(self.breakpoints, x)]

    def intervals(self):
        edges = (self.lower, *self.breakpoints, self.upper)
        return [(lo, hi, name) for lo, hi, name in zip(edges, edges[1:], self.approximants)]


REGION_MAPS = {
    Branch.PRINCIPAL: PiecewiseRegionMap(
        Branch.PRINCIPAL,
        -INV_E,
        math.inf,
        (-0.32358170806015724, 0.14546954290661823, 8.706658967856612),
        ("bp9", "q01", "q02", "asym5"),
    ),
    Branch.MINUS1: PiecewiseRegionMap(
        Branch.MINUS1,
        -INV_E,
        0.0,
        (-0.30298541769, -0.051012917658221676),
        ("bp9", "qm1", "logrec9"),
    ),
}

_Q01 = _ap.RATIONAL_FITS["Q0_1"]
_Q02 = _ap.RATIONAL_FITS["Q0_2"]
_QM1 = _ap.RATIONAL_FITS["Qm1"]
_W0_B1, _W0_B2, _W0_B3 = REGION_MAPS[Branch.PRINCIPAL].breakpoints
_WM1_B1, _WM1_B2 = REGION_MAPS[Branch.MINUS1].breakpoints
_GUARD_EDGE = -INV_E + BRANCH_POINT_GUARD


def _approx_w0(x: float) -> float:
    if x < _W0_B1:
        order = 5 if x < _GUARD_EDGE else 9
        return _ap._bp_poly(_ap._bp_argument(1, x), order)
    if x < _W0_B2:
        return _Q01(x)
    if x < _W0_B3:
        return _Q02(x)
    if x == math.inf:
        return math.inf
    a = math.log(x)
    return _ap._asym(a, math.log(a), 5)


def _approx_wm1(x: float) -> float:
    if x < _WM1_B2:
        if x < _WM1_B1:
            order = 5 if x < _GUARD_EDGE else 9
            return _ap._bp_poly(_ap._bp_argument(-1, x), order)
        return _QM1(x)
    if x < 0.0:
        return _ap._log_recursion(-1, math.log(-x), 9)
    if x == 0.0:
        return -math.inf
    raise DomainError(f"W-1 is real only for x <= 0, got {x!r}")


def initial_approximation(branch, x: float) -> float:
    """Piecewise approximation of ``W_branch(x)`` good to ~5 decimal places.

    Principal branch: branch-point series, ``Q0_1``, ``Q0_2`` and the order-5
    asymptotic series. Lower branch: branch-point series, ``Qm1`` and the
    depth-9 continued logarithm. Right above ``-1/e`` the order-5 series
    stands in for the order-9 one.
    """
    branch = as_branch(branch)
    if math.isnan(x):
        return math.nan
    x = check_branch_point(x)
    if branch is Branch.PRINCIPAL:
        return _approx_w0(x)
    return _approx_wm1(x)


def in_guard_band(branch, x: float) -> bool:
    """True where :func:`lambert_w` returns the approximation unrefined."""
    branch = as_branch(branch)
    if x < _GUARD_EDGE:
        return True
    if branch is Branch.PRINCIPAL:
        return abs(x) <= ZERO_GUARD or x == math.inf
    return x == 0.0


def lambert_w(branch, x: float) -> EvalResult:
    """Evaluate ``W_branch(x)`` to double precision.

    Parameters
    ----------
    branch : Branch or int
        0 for the principal branch, -1 for the lower branch.
    x : float
        ``x >= -1/e``; additionally ``x <= 0`` on the lower branch. Values
        up to four ulps below ``-1/e`` are treated as ``-1/e``.

    Returns
    -------
    EvalResult
        The value and whether a refinement step was applied.

    Raises
    ------
    DomainError
        If ``x`` lies outside the branch's domain.
    """
    branch = as_branch(branch)
    if math.isnan(x):
        return EvalResult(math.nan, False)
    x = check_branch_point(x)
    if branch is Branch.PRINCIPAL:
        w = _approx_w0(x)
        if x < _GUARD_EDGE or abs(x) <= ZERO_GUARD or x == math.inf:
            return EvalResult(w, False)
    else:
        w = _approx_wm1(x)
        if x < _GUARD_EDGE or x == 0.0:
            return EvalResult(w, False)
    return EvalResult(fritsch_step(x, w)[0], True)


def lambert_w_exp_arg(branch, d: float) -> float:
    """``W_branch(-exp(d - 1))`` for ``d <= 0``.

    Callers that know their argument as an exponent keep the distance to the
    branch point, ``1 - exp(d)``, without the cancellation in ``1 + e x``.
    Inside the branch-point guard band the order-9 series is summed on that
    exact distance; elsewhere this is ``lambert_w`` of the rounded argument.
    """
    branch = as_branch(branch)
    if d > 0:
        raise DomainError(f"W(-exp(d - 1)) needs d <= 0, got {d!r}")
    gap = -math.expm1(d)  # 1 + e x
    if gap * INV_E < BRANCH_POINT_GUARD:
        return _ap._bp_poly(branch.sign * math.sqrt(2.0 * gap), 9)
    return lambert_w(branch, -math.exp(d - 1.0)).value


def lambertw(x: float, branch=0) -> float:
    """Shorthand for ``lambert_w(branch, x).value``."""
    return lambert_w(branch, x).value
