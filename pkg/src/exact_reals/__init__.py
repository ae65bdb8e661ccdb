"""Exact real arithmetic built on the completion monad over the rationals."""

from .creal import CReal, DomainError, SeparationError, from_rational, make_real
from .elementary import pi, pi_scaled
from .expr import evaluate, parse
from .output import format_digits

__all__ = [
    "CReal",
    "DomainError",
    "SeparationError",
    "from_rational",
    "make_real",
    "pi",
    "pi_scaled",
    "evaluate",
    "parse",
    "format_digits",
]
