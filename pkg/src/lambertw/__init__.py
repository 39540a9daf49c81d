"""Real branches of the Lambert W function in double precision."""

from .branch import INV_E, Branch, DegenerateStep, DomainError, SingularStep
from .core import EvalResult, initial_approximation, lambert_w, lambertw

__all__ = [
    "INV_E",
    "Branch",
    "DomainError",
    "SingularStep",
    "DegenerateStep",
    "EvalResult",
    "lambert_w",
    "lambertw",
    "initial_approximation",
]

__version__ = "0.1.0"
