"""Closed forms for D^n [x^lambda * exp(c * x^p)] and an exact Taylor oracle.

Every method returns a :class:`~lahlab.models.DerivClosedForm`, the normal
form exp(c x^p) * x^(lambda - n) * sum_k a_k x^(p k), so two methods agree
exactly when their coefficient tuples are equal. The oracle works at a point
x0 and strips the common factor exp(c x0^p), leaving a rational number.
"""

from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List

from .errors import DegenerateInputError, UsageError
from .exact import (
    RationalLike,
    alt_sign,
    binomial,
    factorial,
    falling,
    gen_binomial,
    rational_power,
    to_rational,
)
from .models import DerivClosedForm, DerivSpec
from .polynomials import laguerre
from .sequences import lah, stirling_first, stirling_second
from .series import TruncSeries, series_exp, series_mul

logger = logging.getLogger(__name__)


class Method(str, Enum):
    LAH = "lah"
    LAGUERRE = "laguerre"
    SCHWATT = "schwatt"
    EXPPOLY = "exppoly"
    BRYCHKOV = "brychkov"
    LEIBNIZ = "leibniz"


def _require_order(n: int) -> None:
    if n < 0:
        raise UsageError(f"derivative order must be nonnegative, got {n}")


def _require_nonzero_p(p: Fraction) -> None:
    if p == 0:
        raise DegenerateInputError(
            "p = 0 makes exp(c x^p) constant; the x^(p k) normal form is undefined"
        )


def _form(n: int, c: RationalLike, p: RationalLike, lam: RationalLike, coeffs) -> DerivClosedForm:
    return DerivClosedForm(spec=DerivSpec(n=n, c=c, p=p, lam=lam), coeffs=tuple(coeffs))


def derive_via_lah(n: int) -> DerivClosedForm:
    """D^n e^(1/x) with a_k = (-1)^n L(n, k), k starting at 0."""
    _require_order(n)
    sign = alt_sign(n)
    return _form(n, 1, -1, 0, (sign * lah(n, k) for k in range(n + 1)))


def derive_via_laguerre(n: int) -> DerivClosedForm:
    """(-1)^n n! L_n^(-1)(-1/x): the x^k coefficient moves to the x^(-k) slot."""
    _require_order(n)
    poly = laguerre(-1, n)
    scale = alt_sign(n) * factorial(n)
    return _form(n, 1, -1, 0, (scale * poly[k] * alt_sign(k) for k in range(n + 1)))


def derive_via_schwatt(n: int, c: RationalLike, p: RationalLike) -> DerivClosedForm:
    """Schwatt's double sum with generalised binomials binom(p j, n)."""
    _require_order(n)
    c, p = to_rational(c), to_rational(p)
    _require_nonzero_p(p)
    if n == 0:
        return _form(0, c, p, 0, [1])
    n_fact = factorial(n)
    coeffs = [Fraction(0)]
    for k in range(1, n + 1):
        inner = sum(
            (alt_sign(j) * binomial(k, j) * gen_binomial(p * j, n) for j in range(1, k + 1)),
            Fraction(0),
        )
        coeffs.append(n_fact * alt_sign(k) * c**k / factorial(k) * inner)
    return _form(n, c, p, 0, coeffs)


def derive_via_exppoly(n: int, c: RationalLike, p: RationalLike) -> DerivClosedForm:
    """sum_j s(n, j) p^j phi_j(c x^p), expanded with phi_j(y) = sum_k S(j, k) y^k."""
    _require_order(n)
    c, p = to_rational(c), to_rational(p)
    _require_nonzero_p(p)
    coeffs = []
    for k in range(n + 1):
        total = sum(
            (stirling_first(n, j) * p**j * stirling_second(j, k) for j in range(k, n + 1)),
            Fraction(0),
        )
        coeffs.append(total * c**k)
    return _form(n, c, p, 0, coeffs)


def derive_brychkov(n: int, lam: RationalLike, a: RationalLike) -> DerivClosedForm:
    """D^n [x^lambda e^(-a/x)] = (-1)^n n! e^(-a/x) x^(lambda-n) L_n^(-lambda-1)(a/x)."""
    _require_order(n)
    lam, a = to_rational(lam), to_rational(a)
    poly = laguerre(-lam - 1, n)
    scale = alt_sign(n) * factorial(n)
    return _form(n, -a, -1, lam, (scale * poly[k] * a**k for k in range(n + 1)))


def derive_via_leibniz(n: int, c: RationalLike, p: RationalLike, lam: RationalLike) -> DerivClosedForm:
    """Leibniz rule on x^lambda * g with the derivatives of g from Schwatt's form.

    D^k x^lambda = falling(lambda, k) x^(lambda-k), and every D^(n-k) g carries
    x^-(n-k), so all terms share the prefactor x^(lambda-n).
    """
    _require_order(n)
    c, p, lam = to_rational(c), to_rational(p), to_rational(lam)
    _require_nonzero_p(p)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        weight = binomial(n, k) * falling(lam, k)
        if weight == 0:
            continue
        inner = derive_via_schwatt(n - k, c, p).coeffs
        for j, value in enumerate(inner):
            coeffs[j] += weight * value
    return _form(n, c, p, lam, coeffs)


# ── evaluation ────────────────────────────────────────────────────────────────

def evaluate_form(form: DerivClosedForm, x0: RationalLike) -> Fraction:
    """x0^(lambda-n) * sum_k a_k x0^(p k), i.e. the form at x0 without exp(c x0^p)."""
    x0 = to_rational(x0)
    spec = form.spec
    _require_nonzero_p(spec.p)
    x0_p = rational_power(x0, spec.p)
    total = Fraction(0)
    for k, a_k in enumerate(form.coeffs):
        if a_k:
            total += a_k * x0_p**k
    return rational_power(x0, spec.lam - spec.n) * total


def _binomial_series(exponent: Fraction, order: int) -> TruncSeries:
    # (1 + u)^exponent
    return TruncSeries((gen_binomial(exponent, i) for i in range(order + 1)), order)


def taylor_oracle(spec: DerivSpec, x0: RationalLike) -> Fraction:
    """D^n [x^lambda e^(c x^p)](x0) / e^(c x0^p), computed independently of the
    closed forms.

    With x = x0 (1 + u), x^p - x0^p = x0^p ((1+u)^p - 1) has no constant
    term, so its exponential is a rational series in u; the n-th derivative
    is n! [u^n] / x0^n.
    """
    x0 = to_rational(x0)
    _require_nonzero_p(spec.p)
    if x0 == 0:
        raise DegenerateInputError("the oracle expands around x0 != 0")
    order = max(spec.n, 1)
    x0_p = rational_power(x0, spec.p)
    x0_lam = rational_power(x0, spec.lam)
    exponent = (_binomial_series(spec.p, order) - 1) * (spec.c * x0_p)
    expansion = series_mul(_binomial_series(spec.lam, order) * x0_lam, series_exp(exponent))
    return factorial(spec.n) * expansion[spec.n] / x0**spec.n


# ── method dispatch ───────────────────────────────────────────────────────────

_METHODS: Dict[Method, Callable[[DerivSpec], DerivClosedForm]] = {
    Method.LAH: lambda s: derive_via_lah(s.n),
    Method.LAGUERRE: lambda s: derive_via_laguerre(s.n),
    Method.SCHWATT: lambda s: derive_via_schwatt(s.n, s.c, s.p),
    Method.EXPPOLY: lambda s: derive_via_exppoly(s.n, s.c, s.p),
    Method.BRYCHKOV: lambda s: derive_brychkov(s.n, s.lam, s.a),
    Method.LEIBNIZ: lambda s: derive_via_leibniz(s.n, s.c, s.p, s.lam),
}


def _is_reciprocal_exp(spec: DerivSpec) -> bool:
    return spec.c == 1 and spec.p == -1 and spec.lam == 0


def method_applies(method: Method, spec: DerivSpec) -> bool:
    method = Method(method)
    if method in (Method.LAH, Method.LAGUERRE):
        return _is_reciprocal_exp(spec)
    if method in (Method.SCHWATT, Method.EXPPOLY):
        return spec.lam == 0
    if method is Method.BRYCHKOV:
        return spec.p == -1
    return True


def applicable_methods(spec: DerivSpec) -> List[Method]:
    _require_nonzero_p(spec.p)
    return [m for m in Method if method_applies(m, spec)]


def derive(spec: DerivSpec, method: Method) -> DerivClosedForm:
    method = Method(method)
    _require_nonzero_p(spec.p)
    if not method_applies(method, spec):
        raise UsageError(
            f"method '{method.value}' does not cover c={spec.c}, p={spec.p}, lambda={spec.lam}"
        )
    logger.debug("deriving n=%d c=%s p=%s lambda=%s via %s", spec.n, spec.c, spec.p, spec.lam, method.value)
    return _METHODS[method](spec)
