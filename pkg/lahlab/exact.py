"""Exact scalar primitives shared by every lahlab module.

The universal scalar is :class:`fractions.Fraction` (aliased ``Rational``);
integers are used where a value is provably integral (factorials, triangle
entries). Nothing here touches floating point.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from sympy import integer_nthroot

from .errors import DomainError, UsageError

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Accepts ints, Fractions and the literals ``"p/q"`` / ``"p"``. Floats and
    decimal-point strings are rejected so inexact input never sneaks in.
    """
    if isinstance(value, bool):
        raise UsageError(f"{value!r} is not a rational number")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise UsageError(
                f"'{value}' is not an exact rational (examples: 3  -1  1/2  -3/2)"
            )
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise UsageError(f"'{value}' has a zero denominator") from None
    raise UsageError(f"{value!r} is not an exact rational (got {type(value).__name__})")


def format_rational(value: Union[int, Fraction]) -> str:
    """Render as ``"p"`` for integers and ``"p/q"`` otherwise (lowest terms, q > 0)."""
    return str(Fraction(value))


def alt_sign(n: int) -> int:
    """(-1)**n without the power."""
    return -1 if n % 2 else 1


def _require_nonnegative(name: str, n: int) -> None:
    if n < 0:
        raise UsageError(f"{name} must be a nonnegative integer, got {n}")


def factorial(n: int) -> int:
    _require_nonnegative("n", n)
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    _require_nonnegative("n", n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rising(x: RationalLike, n: int) -> Fraction:
    """x(x+1)...(x+n-1); 1 when n = 0."""
    _require_nonnegative("n", n)
    x = to_rational(x)
    result = Fraction(1)
    for i in range(n):
        result *= x + i
    return result


def falling(x: RationalLike, n: int) -> Fraction:
    """x(x-1)...(x-n+1); 1 when n = 0."""
    _require_nonnegative("n", n)
    x = to_rational(x)
    result = Fraction(1)
    for i in range(n):
        result *= x - i
    return result


def gen_binomial(x: RationalLike, n: int) -> Fraction:
    """Generalised binomial coefficient binom(x, n) for rational x."""
    return falling(x, n) / math.factorial(n)


def _exact_root(value: int, degree: int) -> int:
    root, exact = integer_nthroot(value, degree)
    if not exact:
        raise DomainError(f"{value} is not a perfect {degree}-th power")
    return int(root)


def rational_power(base: RationalLike, exponent: RationalLike) -> Fraction:
    """base**exponent when the result is rational.

    For exponent a/q the base must be the q-th power of a rational; negative
    bases are only allowed for odd q.
    """
    base = to_rational(base)
    exponent = to_rational(exponent)
    if base == 0:
        if exponent > 0:
            return Fraction(0)
        raise DomainError(f"0 cannot be raised to the power {exponent}")
    q = exponent.denominator
    if q == 1:
        return base ** exponent.numerator
    if base < 0 and q % 2 == 0:
        raise DomainError(f"{base} has no real {q}-th root")
    magnitude = abs(base)
    try:
        root = Fraction(
            _exact_root(magnitude.numerator, q),
            _exact_root(magnitude.denominator, q),
        )
    except DomainError:
        raise DomainError(
            f"{format_rational(base)}^{format_rational(exponent)} is not rational"
        ) from None
    if base < 0:
        root = -root
    return root ** exponent.numerator
