"""Branch identifiers, shared constants and the error types of the package."""

from __future__ import annotations

import enum
import math

__all__ = [
    "Branch",
    "INV_E",
    "BRANCH_POINT_SLACK",
    "DomainError",
    "SingularStep",
    "DegenerateStep",
    "as_branch",
    "check_branch_point",
]

#: 1/e, computed once and shared by every module.
INV_E = math.exp(-1.0)

#: Inputs in ``[-1/e - slack, -1/e)`` are treated as ``-1/e``. Four ulps.
BRANCH_POINT_SLACK = 4 * math.ulp(INV_E)


class DomainError(ValueError):
    """Argument outside the real domain of the requested branch."""


class SingularStep(ArithmeticError):
    """An iteration step was asked to evaluate at a singular point."""


class DegenerateStep(ArithmeticError):
    """An iteration step hit a vanishing denominator."""


class Branch(enum.IntEnum):
    """The two real branches of the Lambert W function.

    ``Branch(0)`` is the principal branch, defined on ``[-1/e, inf)``;
    ``Branch(-1)`` is the lower branch, defined on ``[-1/e, 0]``. Any other
    integer raises ``ValueError``.
    """

    PRINCIPAL = 0
    MINUS1 = -1

    @property
    def sign(self) -> int:
        """+1 for the principal branch, -1 for the lower one."""
        return 2 * int(self) + 1


def as_branch(branch) -> Branch:
    if isinstance(branch, Branch):
        return branch
    if isinstance(branch, str):
        try:
            branch = int(branch)
        except ValueError:
            raise ValueError(f"invalid branch {branch!r}, expected 0 or -1") from None
    try:
        return Branch(branch)
    except ValueError:
        raise ValueError(f"invalid branch {branch!r}, expected 0 or -1") from None


def check_branch_point(x: float) -> float:
    """Clamp ``x`` onto ``-1/e`` when it lies within the slack below it.

    Raises
    ------
    DomainError
        If ``x`` is further below ``-1/e`` than the slack allows.
    """
    if x < -INV_E:
        if x >= -INV_E - BRANCH_POINT_SLACK:
            return -INV_E
        raise DomainError(f"x = {x!r} is below the branch point -1/e")
    return x
