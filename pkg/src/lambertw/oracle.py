"""Reference values and accuracy bookkeeping.

The reference solver shares nothing with the approximations under test: it
brackets the root of ``y exp(y) - x`` on the monotone piece belonging to
the requested branch, bisects, then polishes with Halley steps. All of it
runs in ``numpy.longdouble`` (80-bit extended on x86), which leaves a few
guard digits when the result is rounded back to double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import approximations as ap
from .branch import INV_E, Branch, DomainError, as_branch
from .core import initial_approximation, lambert_w
from .iterations import fritsch_step, halley_step, iterate_fixed

__all__ = [
    "ORACLE_MARGIN",
    "DELTA_CAP",
    "AccuracySample",
    "Grid",
    "EVALUATORS",
    "STEPS",
    "reference_w",
    "reference_w_array",
    "delta",
    "sweep",
    "OrderReport",
    "measure_order",
]

#: The oracle is only defined from ``-1/e + ORACLE_MARGIN`` upwards.
ORACLE_MARGIN = 1e-12
DELTA_CAP = 17.0

_BRACKETS = {
    Branch.PRINCIPAL: (-1.0, 710.0),
    # W-1 of the smallest subnormal is about -751
    Branch.MINUS1: (-760.0, -1.0),
}
_BRACKET_WIDTH = 1e-13

STEPS = {"halley": halley_step, "fritsch": fritsch_step}


def _oracle_domain_mask(branch: Branch, x: np.ndarray) -> np.ndarray:
    ok = x >= -INV_E + ORACLE_MARGIN
    if branch is Branch.MINUS1:
        ok &= x <= 0.0
    return ok & np.isfinite(x)


def _solve(branch: Branch, x: np.ndarray) -> np.ndarray:
    X = x.astype(np.longdouble)
    lo_y, hi_y = _BRACKETS[branch]
    lo = np.full(X.shape, lo_y, dtype=np.longdouble)
    hi = np.full(X.shape, hi_y, dtype=np.longdouble)
    # y e^y - x is increasing on [-1, inf) and decreasing on (-inf, -1]
    increasing = branch is Branch.PRINCIPAL
    n_bisect = math.ceil(math.log2((hi_y - lo_y) / _BRACKET_WIDTH))
    for _ in range(n_bisect):
        mid = (lo + hi) / 2
        f = mid * np.exp(mid) - X
        go_right = (f < 0) if increasing else (f > 0)
        lo = np.where(go_right, mid, lo)
        hi = np.where(go_right, hi, mid)
    y = (lo + hi) / 2

    active = np.ones(X.shape, dtype=bool)
    for _ in range(50):
        if not active.any():
            break
        ya, xa = y[active], X[active]
        ey = np.exp(ya)
        t = ya * ey - xa
        y1 = ya + 1
        step = t / (ey * y1 - (ya + 2) * t / (2 * y1))
        y[active] = ya - step
        done = np.abs(step) <= 2 * np.spacing(np.abs(ya))
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    return y.astype(np.float64)


def reference_w_array(branch, x, *, strict: bool = True) -> np.ndarray:
    """Reference ``W_branch`` on an array of arguments.

    With ``strict=False`` points outside the oracle's domain come back as
    NaN instead of raising.
    """
    branch = as_branch(branch)
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    ok = _oracle_domain_mask(branch, x)
    if strict and not ok.all():
        bad = x[~ok][0]
        raise DomainError(f"reference W{int(branch)} undefined at x = {bad!r}")
    out = np.full(x.shape, np.nan)
    if branch is Branch.MINUS1:
        zero = ok & (x == 0.0)
        out[zero] = -np.inf
        ok &= ~zero
    if ok.any():
        out[ok] = _solve(branch, x[ok])
    return out


def reference_w(branch, x: float) -> float:
    """Reference value of ``W_branch(x)``, for ``x >= -1/e + 1e-12``."""
    return float(reference_w_array(branch, [x])[0])


def delta(approx: float, reference: float) -> float:
    """Number of correct decimal places, ``-log10|approx - reference|``.

    Capped at 17 when the difference is below ``1e-17``.
    """
    d = abs(approx - reference)
    if math.isnan(d):
        return math.nan
    if d < 10.0**-DELTA_CAP:
        return DELTA_CAP
    return -math.log10(d)


@dataclass(frozen=True)
class AccuracySample:
    x: float
    approx: float
    reference: float
    delta: float
    valid: bool = True


@dataclass(frozen=True)
class Grid:
    """``n`` points from ``lo`` to ``hi`` inclusive, linear or logarithmic.

    A logarithmic grid needs both ends of the same sign; for negative ends
    the spacing is logarithmic in ``|x|``.
    """

    kind: str
    lo: float
    hi: float
    n: int = 1000

    def __post_init__(self):
        if self.kind not in ("linear", "log"):
            raise ValueError(f"grid kind must be 'linear' or 'log', got {self.kind!r}")
        if self.n < 2:
            raise ValueError(f"grid needs n >= 2, got {self.n}")
        if not self.lo < self.hi:
            raise ValueError(f"grid needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.kind == "log" and not (self.lo * self.hi > 0):
            raise ValueError("log grid ends must be nonzero and of the same sign")

    def points(self) -> np.ndarray:
        if self.kind == "linear":
            pts = np.linspace(self.lo, self.hi, self.n)
        else:
            pts = np.geomspace(self.lo, self.hi, self.n)
        pts[0], pts[-1] = self.lo, self.hi
        return pts


def _exprec(branch: Branch, x: float) -> float:
    if branch is not Branch.PRINCIPAL:
        raise DomainError("the continued exponential only represents W0")
    return ap.exp_recursion(x)


def _piecewise_then(step, n: int):
    def evaluate(branch, x):
        return iterate_fixed(step, x, initial_approximation(branch, x), n)

    return evaluate


EVALUATORS: dict[str, Callable[[Branch, float], float]] = {
    "bp9": lambda b, x: ap.branch_point_expansion(b, x, 9),
    "bp5": lambda b, x: ap.branch_point_expansion(b, x, 5),
    "q01": lambda b, x: ap.rational_fit("Q0_1", x),
    "q02": lambda b, x: ap.rational_fit("Q0_2", x),
    "qm1": lambda b, x: ap.rational_fit("Qm1", x),
    "asym5": lambda b, x: ap.asymptotic_expansion(b, x, 5),
    "logrec9": lambda b, x: ap.log_recursion(b, x, 9),
    "exprec": _exprec,
    "piecewise": initial_approximation,
    "piecewise+fritsch1": _piecewise_then(fritsch_step, 1),
    "piecewise+halley1": _piecewise_then(halley_step, 1),
    "piecewise+halley2": _piecewise_then(halley_step, 2),
    "full": lambda b, x: lambert_w(b, x).value,
}

_POINT_ERRORS = (ArithmeticError, ValueError)


def sweep(branch, evaluator: str | Callable, grid: Grid | np.ndarray) -> list[AccuracySample]:
    """Accuracy of ``evaluator`` against the reference on every grid point.

    ``evaluator`` is a key of :data:`EVALUATORS` or a callable
    ``f(branch, x)``. Points where either side fails are kept, with NaN
    fields and ``valid=False``.
    """
    branch = as_branch(branch)
    if isinstance(evaluator, str):
        try:
            evaluator = EVALUATORS[evaluator]
        except KeyError:
            raise ValueError(f"unknown evaluator {evaluator!r}; choose from {sorted(EVALUATORS)}") from None
    xs = grid.points() if isinstance(grid, Grid) else np.asarray(grid, dtype=np.float64)
    refs = reference_w_array(branch, xs, strict=False)
    samples = []
    for x, ref in zip(xs.tolist(), refs.tolist()):
        try:
            approx = float(evaluator(branch, x))
        except _POINT_ERRORS:
            approx = math.nan
        d = delta(approx, ref) if math.isfinite(approx) and math.isfinite(ref) else math.nan
        samples.append(AccuracySample(x, approx, ref, d, not math.isnan(d)))
    return samples


@dataclass(frozen=True)
class OrderReport:
    method: str
    x: float
    root: float
    perturbations: tuple[float, ...]
    errors: tuple[float, ...]
    exponent: float
    fixed_point_ulps: float


def measure_order(method: str, x: float, branch=0, perturbations=(1e-2, 1e-3, 1e-4), dps: int = 60) -> OrderReport:
    """Empirical convergence order of one step at ``x``.

    The root is perturbed by each ``delta``, one step is taken in ``dps``-digit
    arithmetic and the exponent ``k`` of ``error_out ~ C delta^k`` is fitted by
    least squares in log-log space. ``fixed_point_ulps`` is how far one
    double-precision step moves the double reference root.
    """
    import mpmath

    try:
        step = STEPS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(STEPS)}") from None
    branch = as_branch(branch)
    w_ref = reference_w(branch, x)
    kwargs = {"exp": mpmath.exp} if method == "halley" else {"log": mpmath.log}
    with mpmath.workdps(dps):
        X = mpmath.mpf(x)
        root = mpmath.findroot(lambda y: y * mpmath.exp(y) - X, mpmath.mpf(w_ref))
        errors = []
        for d in perturbations:
            w1 = step(X, root + d, **kwargs)[0]
            errors.append(float(abs(w1 - root)))
    slope = float(np.polyfit(np.log10(perturbations), np.log10(errors), 1)[0])
    moved = step(x, w_ref)[0] - w_ref
    ulps = abs(moved) / math.ulp(w_ref) if w_ref != 0 else abs(moved) / math.ulp(0.0)
    return OrderReport(method, x, w_ref, tuple(perturbations), tuple(errors), slope, ulps)
