"""Canonical text for exact values.

The same strings are used in reports, CSV cells and JSON lines, so two
values are equal exactly when their renderings are equal.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, List

from .exact import format_rational
from .polynomials import Poly


def format_poly(poly: Poly) -> str:
    """Ascending coefficient list, ``"0"`` for the zero polynomial."""
    if poly.is_zero():
        return "0"
    return ", ".join(format_rational(c) for c in poly.coeffs)


def format_exact(value: Any) -> str:
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, Poly):
        return format_poly(value)
    if isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        if any(isinstance(item, Poly) for item in value):
            return "; ".join(f"[{format_exact(item)}]" for item in value)
        return "(" + ", ".join(format_exact(item) for item in value) + ")"
    raise TypeError(f"cannot format {type(value).__name__} exactly")


def exact_values(value: Any) -> List[str]:
    """Flatten a value into the list-of-strings shape used by json lines."""
    if isinstance(value, Poly):
        return [format_rational(c) for c in value.coeffs] or ["0"]
    if isinstance(value, (list, tuple)):
        return [format_exact(item) for item in value]
    return [format_exact(value)]
