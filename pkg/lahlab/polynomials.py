"""Dense univariate polynomials over the rationals and the polynomial families
built on them: Laguerre polynomials of any rational order, exponential (Bell)
polynomials, and conversions between the rising and falling factorial bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Tuple, Union

from .errors import DomainError, UsageError
from .exact import RationalLike, alt_sign, factorial, to_rational
from .sequences import lah, stirling_second

Scalar = Union[int, Fraction]


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients and
    equality is plain tuple equality.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        values = [to_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    # ── constructors ──────────────────────────────────────────────────────────

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def constant(cls, value: RationalLike) -> "Poly":
        return cls([value])

    @classmethod
    def monomial(cls, coefficient: RationalLike, degree: int) -> "Poly":
        if degree < 0:
            raise UsageError(f"degree must be nonnegative, got {degree}")
        return cls([0] * degree + [coefficient])

    # ── container protocol ────────────────────────────────────────────────────

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        return self.pretty()

    # ── ring operations ───────────────────────────────────────────────────────

    def __add__(self, other: Union["Poly", Scalar]) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return Poly(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other: Union["Poly", Scalar]) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return (-self) + other

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise UsageError("negative powers of a polynomial are not polynomials")
        result = Poly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: RationalLike) -> "Poly":
        factor = to_rational(factor)
        return Poly(factor * c for c in self._coeffs)

    def differentiate(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def shift_degree(self, by: int) -> "Poly":
        """Multiply by x**by."""
        if self.is_zero():
            return self
        return Poly([0] * by + list(self._coeffs))

    def __call__(self, x0: RationalLike) -> Fraction:
        return self.eval(x0)

    def eval(self, x0: RationalLike) -> Fraction:
        x0 = to_rational(x0)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x0 + c
        return acc

    def compose_scale(self, factor: RationalLike) -> "Poly":
        """P(factor * x)."""
        factor = to_rational(factor)
        return Poly(c * factor**i for i, c in enumerate(self._coeffs))

    # ── display ───────────────────────────────────────────────────────────────

    def pretty(self, var: str = "x") -> str:
        """Descending human-readable form, e.g. ``-x^3/6 + x^2 - x``."""
        terms = [(i, c) for i, c in enumerate(self._coeffs) if c != 0]
        if not terms:
            return "0"
        parts = []
        for position, (degree, c) in enumerate(reversed(terms)):
            magnitude = abs(c)
            if degree == 0:
                body = str(magnitude)
            else:
                mono = var if degree == 1 else f"{var}^{degree}"
                num, den = magnitude.numerator, magnitude.denominator
                body = mono if num == 1 else f"{num}{mono}"
                if den != 1:
                    body = f"{body}/{den}"
            if position == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)


def _as_poly(value: object) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly.constant(value)
    return NotImplemented


# ── module-level ring operations ──────────────────────────────────────────────

def add(a: Poly, b: Poly) -> Poly:
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    return a * b


def scale(factor: RationalLike, p: Poly) -> Poly:
    return p.scale(factor)


def differentiate(p: Poly) -> Poly:
    return p.differentiate()


def evaluate(p: Poly, x0: RationalLike) -> Fraction:
    return p.eval(x0)


# ── factorial bases ───────────────────────────────────────────────────────────

def rising_poly(n: int) -> Poly:
    """x(x+1)...(x+n-1) expanded."""
    result = Poly.one()
    for i in range(n):
        result = result * Poly([i, 1])
    return result


def falling_poly(n: int) -> Poly:
    """x(x-1)...(x-n+1) expanded."""
    result = Poly.one()
    for i in range(n):
        result = result * Poly([-i, 1])
    return result


def binomial_poly(n: int, scale_by: RationalLike = 1, shift: RationalLike = 0) -> Poly:
    """binom(scale_by * v + shift, n) as a polynomial in v."""
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    scale_by, shift = to_rational(scale_by), to_rational(shift)
    result = Poly.one()
    for i in range(n):
        result = result * Poly([shift - i, scale_by])
    return result.scale(Fraction(1, factorial(n)))


@dataclass(frozen=True)
class BasisConversion:
    """Coefficients connecting the two factorial bases, with the expansion check."""

    n: int
    coefficients: Tuple[int, ...]
    expanded: Poly
    target: Poly

    @property
    def holds(self) -> bool:
        return self.expanded == self.target


def rising_to_falling(n: int) -> BasisConversion:
    """x(x+1)...(x+n-1) = sum_k L(n, k) x(x-1)...(x-k+1)."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    coefficients = tuple(lah(n, k) for k in range(1, n + 1))
    expanded = Poly()
    for k, coefficient in enumerate(coefficients, start=1):
        expanded = expanded + falling_poly(k).scale(coefficient)
    return BasisConversion(n, coefficients, expanded, rising_poly(n))


def falling_to_rising(n: int) -> BasisConversion:
    """x(x-1)...(x-n+1) = sum_k (-1)^(n-k) L(n, k) x(x+1)...(x+k-1)."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    coefficients = tuple(alt_sign(n - k) * lah(n, k) for k in range(1, n + 1))
    expanded = Poly()
    for k, coefficient in enumerate(coefficients, start=1):
        expanded = expanded + rising_poly(k).scale(coefficient)
    return BasisConversion(n, coefficients, expanded, falling_poly(n))


# ── Laguerre polynomials ──────────────────────────────────────────────────────

def laguerre(alpha: RationalLike, n: int) -> Poly:
    """Generalised Laguerre polynomial L_n^(alpha) for any rational alpha.

    The Gamma ratio Gamma(n+alpha+1)/Gamma(k+alpha+1) is the finite product
    (alpha+k+1)...(alpha+n), so alpha = -1 needs no limit: the k = 0 product
    contains the factor alpha + 1 = 0.
    """
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    alpha = to_rational(alpha)
    coeffs = []
    for k in range(n + 1):
        product = Fraction(1)
        for i in range(k + 1, n + 1):
            product *= alpha + i
        coeffs.append(alt_sign(k) * product / (factorial(k) * factorial(n - k)))
    return Poly(coeffs)


def laguerre_m1_lah(n: int) -> Poly:
    """L_n^(-1)(x) = (1/n!) sum_k L(n, k) (-x)^k."""
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    n_fact = factorial(n)
    return Poly(Fraction(alt_sign(k) * lah(n, k), n_fact) for k in range(n + 1))


_RODRIGUEZ_ALPHAS = (-1, 0)


def laguerre_rodriguez(alpha: int, n: int) -> Poly:
    """(x^(-alpha)/n!) (D - 1)^n x^(n + alpha), for alpha in {-1, 0}.

    For n = 0 the operator is the identity and the result is 1 even though
    x^(alpha) is not a polynomial when alpha = -1.
    """
    if alpha not in _RODRIGUEZ_ALPHAS:
        raise DomainError(
            f"Rodriguez form is only supported for alpha in {_RODRIGUEZ_ALPHAS}, got {alpha}"
        )
    alpha = int(alpha)
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    if n == 0:
        return Poly.one()
    current = Poly.monomial(1, n + alpha)
    for _ in range(n):
        current = current.differentiate() - current
    return current.shift_degree(-alpha).scale(Fraction(1, factorial(n)))


# ── exponential polynomials ───────────────────────────────────────────────────

def bell_poly(n: int) -> Poly:
    """phi_n(x) = sum_k S(n, k) x^k."""
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    return Poly(stirling_second(n, k) for k in range(n + 1))


def xD_power(n: int) -> Poly:
    """P with (xD)^n e^x = P(x) e^x, by iterating P -> x (P' + P)."""
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    current = Poly.one()
    for _ in range(n):
        current = (current.differentiate() + current).shift_degree(1)
    return current
