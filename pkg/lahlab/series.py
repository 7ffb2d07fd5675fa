"""Truncated formal power series in t and the generating-function checks.

A series of order N keeps the coefficients of t^0..t^N over either the
rationals or the polynomial ring Q[x]. Everything is formal: no value is ever
substituted for t, so convergence domains play no part.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Tuple, Union

from .errors import DomainError, UsageError
from .exact import RationalLike, factorial, rising, to_rational
from .polynomials import Poly, bell_poly, binomial_poly, laguerre
from .sequences import lah, stirling_first, stirling_second

DEFAULT_ORDER = 12


class Ring(str, Enum):
    RATIONAL = "rational"
    POLY = "poly"


RingElement = Union[Fraction, Poly]


def _ring_zero(ring: Ring) -> RingElement:
    return Poly.zero() if ring is Ring.POLY else Fraction(0)


def _ring_one(ring: Ring) -> RingElement:
    return Poly.one() if ring is Ring.POLY else Fraction(1)


def _coerce(ring: Ring, value: Any) -> RingElement:
    if ring is Ring.POLY:
        return value if isinstance(value, Poly) else Poly.constant(value)
    if isinstance(value, Poly):
        raise UsageError("a polynomial coefficient needs a Poly-ring series")
    return to_rational(value)


class TruncSeries:
    """Coefficients of t^0..t^order over ``ring``."""

    __slots__ = ("_coeffs", "order", "ring")

    def __init__(self, coeffs: Iterable[Any], order: int, ring: Ring = Ring.RATIONAL) -> None:
        if order < 0:
            raise UsageError(f"order must be nonnegative, got {order}")
        self.order = order
        self.ring = Ring(ring)
        values = [_coerce(self.ring, c) for c in coeffs][: order + 1]
        values.extend(_ring_zero(self.ring) for _ in range(order + 1 - len(values)))
        self._coeffs: Tuple[RingElement, ...] = tuple(values)

    @classmethod
    def zero(cls, order: int, ring: Ring = Ring.RATIONAL) -> "TruncSeries":
        return cls((), order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring = Ring.RATIONAL) -> "TruncSeries":
        return cls([_ring_one(ring)], order, ring)

    @classmethod
    def variable(cls, order: int, ring: Ring = Ring.RATIONAL) -> "TruncSeries":
        """The series t."""
        return cls([_ring_zero(ring), _ring_one(ring)], order, ring)

    @property
    def coeffs(self) -> Tuple[RingElement, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> RingElement:
        if not 0 <= n <= self.order:
            raise UsageError(f"coefficient t^{n} is outside order {self.order}")
        return self._coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.ring is other.ring
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.ring, self._coeffs))

    def __repr__(self) -> str:
        return f"TruncSeries({[str(c) for c in self._coeffs]}, order={self.order}, ring={self.ring.value})"

    def _check_compatible(self, other: "TruncSeries") -> None:
        if self.order != other.order or self.ring is not other.ring:
            raise UsageError(
                f"series mismatch: order {self.order}/{self.ring.value} "
                f"vs order {other.order}/{other.ring.value}"
            )

    def __add__(self, other: Union["TruncSeries", RationalLike, Poly]) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = TruncSeries([other], self.order, self.ring)
        self._check_compatible(other)
        return TruncSeries((a + b for a, b in zip(self._coeffs, other._coeffs)), self.order, self.ring)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries((-c for c in self._coeffs), self.order, self.ring)

    def __sub__(self, other: Union["TruncSeries", RationalLike, Poly]) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = TruncSeries([other], self.order, self.ring)
        return self + (-other)

    def __mul__(self, other: Union["TruncSeries", RationalLike, Poly]) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        factor = _coerce(self.ring, other)
        return TruncSeries((c * factor for c in self._coeffs), self.order, self.ring)

    def shift(self) -> "TruncSeries":
        """Multiply by t, dropping the coefficient pushed past the order."""
        return TruncSeries([_ring_zero(self.ring), *self._coeffs[:-1]], self.order, self.ring)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise UsageError(f"cannot raise order {self.order} to {order} by truncation")
        return TruncSeries(self._coeffs, order, self.ring)

    def lift(self) -> "TruncSeries":
        """Embed a rational series into the polynomial ring as constants."""
        if self.ring is Ring.POLY:
            return self
        return TruncSeries((Poly.constant(c) for c in self._coeffs), self.order, Ring.POLY)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the common order."""
    a._check_compatible(b)
    out = []
    for n in range(a.order + 1):
        acc = _ring_zero(a.ring)
        for k in range(n + 1):
            acc = acc + a.coeffs[k] * b.coeffs[n - k]
        out.append(acc)
    return TruncSeries(out, a.order, a.ring)


def series_pow(a: TruncSeries, k: int) -> TruncSeries:
    if k < 0:
        raise UsageError(f"power must be nonnegative, got {k}")
    result = TruncSeries.one(a.order, a.ring)
    for _ in range(k):
        result = series_mul(result, a)
    return result


def _require_zero_constant(a: TruncSeries) -> None:
    if a.coeffs[0] != _ring_zero(a.ring):
        raise DomainError("exp needs a series with zero constant term")


def series_exp(a: TruncSeries) -> TruncSeries:
    """exp(a) from E' = a' E: n E_n = sum_{k=1..n} k a_k E_{n-k}."""
    _require_zero_constant(a)
    out = [_ring_one(a.ring)]
    for n in range(1, a.order + 1):
        acc = _ring_zero(a.ring)
        for k in range(1, n + 1):
            acc = acc + a.coeffs[k] * out[n - k] * k
        out.append(acc * Fraction(1, n))
    return TruncSeries(out, a.order, a.ring)


def series_exp_by_powers(a: TruncSeries) -> TruncSeries:
    """exp(a) as sum_k a^k / k!; slower reference for series_exp."""
    _require_zero_constant(a)
    result = TruncSeries.zero(a.order, a.ring)
    power = TruncSeries.one(a.order, a.ring)
    for k in range(a.order + 1):
        result = result + power * Fraction(1, factorial(k))
        power = series_mul(power, a)
    return result


def geometric(order: int, ring: Ring = Ring.RATIONAL) -> TruncSeries:
    """1/(1 - t) = sum_n t^n."""
    if order < 1:
        raise UsageError(f"order must be positive, got {order}")
    return TruncSeries([_ring_one(ring)] * (order + 1), order, ring)


# ── generating-function checks ────────────────────────────────────────────────

@dataclass(frozen=True)
class CoefficientRow:
    index: int
    extracted: Any
    expected: Any

    @property
    def passed(self) -> bool:
        return self.extracted == self.expected


@dataclass(frozen=True)
class SeriesCheck:
    kind: str
    params: Tuple[Any, ...]
    rows: Tuple[CoefficientRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def extracted(self) -> Tuple[Any, ...]:
        return tuple(row.extracted for row in self.rows)

    @property
    def expected(self) -> Tuple[Any, ...]:
        return tuple(row.expected for row in self.rows)


def lah_column_gf_check(k: int, order: int = DEFAULT_ORDER) -> SeriesCheck:
    """(1/k!) (t/(1-t))^k = sum_n L(n, k) t^n / n!."""
    if not 1 <= k <= order:
        raise UsageError(f"need 1 <= k <= order, got k={k}, order={order}")
    column = series_pow(geometric(order).shift(), k) * Fraction(1, factorial(k))
    rows = tuple(
        CoefficientRow(n, column[n] * factorial(n), lah(n, k)) for n in range(order + 1)
    )
    return SeriesCheck("lahgf", (k, order), rows)


def _laguerre_exponent(order: int) -> TruncSeries:
    # -x t / (1 - t)
    return geometric(order, Ring.POLY).shift() * Poly([0, -1])


def laguerre_m1_gf_check(order: int = DEFAULT_ORDER) -> SeriesCheck:
    """exp(-x t / (1 - t)) = sum_n L_n^(-1)(x) t^n."""
    gf = series_exp(_laguerre_exponent(order))
    rows = tuple(CoefficientRow(n, gf[n], laguerre(-1, n)) for n in range(order + 1))
    return SeriesCheck("laguerregf", (order,), rows)


def laguerre_gf_check(alpha: RationalLike, order: int = DEFAULT_ORDER) -> SeriesCheck:
    """(1 - t)^(-alpha-1) exp(-x t / (1 - t)) = sum_n L_n^(alpha)(x) t^n."""
    alpha = to_rational(alpha)
    beta = alpha + 1
    prefactor = TruncSeries(
        (rising(beta, n) / factorial(n) for n in range(order + 1)), order
    ).lift()
    gf = series_mul(prefactor, series_exp(_laguerre_exponent(order)))
    rows = tuple(CoefficientRow(n, gf[n], laguerre(alpha, n)) for n in range(order + 1))
    return SeriesCheck("laguerregf", (alpha, order), rows)


def bell_gf_check(order: int = DEFAULT_ORDER) -> SeriesCheck:
    """exp(x (e^t - 1)) = sum_n phi_n(x) t^n / n!."""
    if order < 1:
        raise UsageError(f"order must be positive, got {order}")
    exp_t = series_exp(TruncSeries.variable(order))
    gf = series_exp((exp_t - 1).lift() * Poly.x())
    rows = tuple(
        CoefficientRow(n, gf[n] * factorial(n), bell_poly(n)) for n in range(order + 1)
    )
    return SeriesCheck("bellgf", (order,), rows)


def todorov_gf_check(m: int, order: int = DEFAULT_ORDER) -> SeriesCheck:
    """[t^n] ((1 + t)^z - 1)^m = (m!/n!) sum_k s(n, k) S(k, m) z^k, as polynomials in z."""
    if m < 0 or order < 1:
        raise UsageError(f"need m >= 0 and order >= 1, got m={m}, order={order}")
    binomial_series = TruncSeries((binomial_poly(n) for n in range(order + 1)), order, Ring.POLY)
    gf = series_pow(binomial_series - 1, m)
    m_fact = factorial(m)
    rows = []
    for n in range(order + 1):
        expected = Poly(
            stirling_first(n, k) * stirling_second(k, m) for k in range(n + 1)
        ).scale(Fraction(m_fact, factorial(n)))
        rows.append(CoefficientRow(n, gf[n], expected))
    return SeriesCheck("todorovgf", (m, order), tuple(rows))
