"""Initial approximations of the two real Lambert W branches.

Four families live here:

* the series in ``p = ±sqrt(2(1 + e x))`` around the branch point,
* the asymptotic expansion in ``a = ln(±x)`` and ``b = ln(±ln(±x))``,
* rational fits (``Q0_1``, ``Q0_2``, ``Qm1`` plus two spare principal-branch fits),
* the continued logarithm and the continued exponential.

None of these functions decides *where* an approximant is used; that is the
job of :mod:`lambertw.core`. All polynomials are evaluated in Horner form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .branch import Branch, DomainError, as_branch, check_branch_point

__all__ = [
    "BRANCH_POINT_COEFFS",
    "RationalFit",
    "RATIONAL_FITS",
    "AsymptoticArgs",
    "asymptotic_args",
    "branch_point_expansion",
    "asymptotic_expansion",
    "rational_fit",
    "log_recursion",
    "exp_recursion",
]

BRANCH_POINT_COEFFS = (
    Fraction(-1),
    Fraction(1),
    Fraction(-1, 3),
    Fraction(11, 72),
    Fraction(-43, 540),
    Fraction(769, 17280),
    Fraction(-221, 8505),
    Fraction(680863, 43545600),
    Fraction(-1963, 204120),
    Fraction(226287557, 37623398400),
)
_BP = tuple(float(c) for c in BRANCH_POINT_COEFFS)


@dataclass(frozen=True)
class RationalFit:
    """Coefficients of ``[x *] N(x) / D(x)``, both in ascending powers.

    ``window`` is the interval the fit was made for. It is informational only;
    evaluation outside of it is allowed.
    """

    name: str
    numerator: tuple[float, ...]
    denominator: tuple[float, ...]
    leading_x: bool
    window: tuple[float, float] | None

    def __call__(self, x: float) -> float:
        num = 0.0
        for c in reversed(self.numerator):
            num = c + x * num
        den = 0.0
        for c in reversed(self.denominator):
            den = c + x * den
        if self.leading_x:
            return x * num / den
        return num / den


RATIONAL_FITS = {
    fit.name: fit
    for fit in (
        # principal branch, Pade-like fit around 0; window never stated
        RationalFit(
            "Q0_alt0",
            (60.0, 114.0, 17.0),
            (60.0, 174.0, 101.0),
            True,
            None,
        ),
        RationalFit(
            "Q0_1",
            (1.0, 5.931375839364438, 11.392205505329132, 7.338883399111118, 0.6534490169919599),
            (1.0, 6.931373689597704, 16.82349461388016, 16.43072324143226, 5.115235195211697),
            True,
            (-0.31, 0.3),
        ),
        RationalFit(
            "Q0_alt2",
            (1.0, 4.790423028527326, 6.695945075293267, 2.4243096805908033),
            (1.0, 5.790432723810737, 10.986445930034288, 7.391303898769326, 1.1414723648617864),
            True,
            (-0.31, 0.5),
        ),
        RationalFit(
            "Q0_2",
            (1.0, 2.4450530707265568, 1.3436642259582265, 0.14844005539759195, 0.0008047501729129999),
            (1.0, 3.4447089864860025, 3.2924898573719523, 0.9164600188031222, 0.05306864044833221),
            True,
            (0.3, 7.0),
        ),
        RationalFit(
            "Qm1",
            (-7.814176723907436, 253.88810188892484, 657.9493176902304),
            (1.0, -60.43958713690808, 99.98567083107612, 682.6073999909428, 962.1784396969866, 1477.9341280760887),
            False,
            (-0.3, -0.05),
        ),
    )
}


def _bp_poly(p: float, order: int) -> float:
    w = 0.0
    for c in reversed(_BP[: order + 1]):
        w = c + p * w
    return w


def _bp_argument(sign: int, x: float) -> float:
    # rounding in e*x can push the radicand a hair below zero at -1/e
    return sign * math.sqrt(max(0.0, 2.0 * (1.0 + math.e * x)))


def branch_point_expansion(branch, x: float, order: int = 9) -> float:
    """Series around the branch point ``(-1/e, -1)``.

    Sums ``b_i p**i`` for ``i <= order`` with ``p = +sqrt(2(1+ex))`` on the
    principal branch and ``p = -sqrt(2(1+ex))`` on the lower branch.

    Parameters
    ----------
    branch : Branch or int
    x : float
        Argument, ``x >= -1/e``.
    order : int
        Highest power of ``p``, between 1 and 9.
    """
    branch = as_branch(branch)
    if not 1 <= order <= 9:
        raise ValueError(f"order must be in 1..9, got {order}")
    x = check_branch_point(x)
    return _bp_poly(_bp_argument(branch.sign, x), order)


@dataclass(frozen=True)
class AsymptoticArgs:
    a: float
    b: float


def asymptotic_args(branch, x: float) -> AsymptoticArgs:
    branch = as_branch(branch)
    s = branch.sign
    if branch is Branch.PRINCIPAL:
        if not x > 1.0:
            raise DomainError(f"asymptotic expansion of W0 needs x > 1, got {x!r}")
    else:
        x = check_branch_point(x)
        if not x < 0.0:
            raise DomainError(f"asymptotic expansion of W-1 needs x < 0, got {x!r}")
    a = math.log(s * x)
    return AsymptoticArgs(a, math.log(s * a))


def _asym(a: float, b: float, order: int) -> float:
    if order == 0:
        return a - b
    ia = 1.0 / a
    terms = (
        0.5 * (-2.0 + b),
        (6.0 + b * (-9.0 + b * 2.0)) / 6.0,
        (-12.0 + b * (36.0 + b * (-22.0 + b * 3.0))) / 12.0,
        (60.0 + b * (-300.0 + b * (350.0 + b * (-125.0 + b * 12.0)))) / 60.0,
    )[: order - 1]
    inner = 0.0
    for c in reversed(terms):
        inner = ia * (c + inner)
    return a - b + b / a * (1.0 + inner)


def asymptotic_expansion(branch, x: float, order: int = 5) -> float:
    """Large-``|ln x|`` expansion ``a - b + b/a + b(b-2)/(2a^2) + ...``.

    Orders 0 through 5 are available. On the principal branch ``x`` must
    exceed 1 (the expansion is only useful well beyond ``e``); on the lower
    branch ``-1/e <= x < 0``.
    """
    if not 0 <= order <= 5:
        raise ValueError(f"order must be in 0..5, got {order}")
    args = asymptotic_args(branch, x)
    return _asym(args.a, args.b, order)


def rational_fit(name: str, x: float) -> float:
    """Evaluate one of the :data:`RATIONAL_FITS` at ``x``.

    No range policing; the caller picks the fit.
    """
    try:
        fit = RATIONAL_FITS[name]
    except KeyError:
        raise ValueError(f"unknown rational fit {name!r}; choose from {sorted(RATIONAL_FITS)}") from None
    return fit(x)


def _log_recursion(sign: int, logsx: float, depth: int) -> float:
    w = logsx
    for _ in range(depth):
        w = logsx - math.log(sign * w)
    return w


def log_recursion(branch, x: float, depth: int = 9) -> float:
    """Continued logarithm ``ln(±x) - ln(±(ln(±x) - ln(±(...))))``.

    ``depth = 0`` returns ``ln(±x)``. Useful for ``W0`` when ``x > e`` and for
    ``W-1`` close to ``0-``.
    """
    branch = as_branch(branch)
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    s = branch.sign
    if branch is Branch.MINUS1:
        x = check_branch_point(x)
    if not s * x > 0.0:
        raise DomainError(f"log recursion on branch {int(branch)} undefined at x = {x!r}")
    try:
        return _log_recursion(s, math.log(s * x), depth)
    except ValueError:
        raise DomainError(f"log recursion on branch {int(branch)} leaves the real line at x = {x!r}") from None


def exp_recursion(x: float, depth: int = 30) -> float:
    """Continued exponential ``x / exp(x / exp(x / ...))`` for ``W0``.

    Converges (slowly near ``-1/e``) for ``-1/e < x < e``.
    """
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    w = x
    for _ in range(depth):
        w = x / math.exp(w)
    return w

