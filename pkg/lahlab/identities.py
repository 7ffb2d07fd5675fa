"""Exact checks of the Lah / Laguerre / Stirling identities and the suite runner.

Polynomial identities are compared as polynomials (never by sampling), and
every check produces an :class:`~lahlab.models.IdentityReport` carrying both
sides serialised, pass or fail.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import derivatives, metrics, polynomials, series
from .errors import UsageError
from .exact import alt_sign, binomial, factorial, rising
from .models import IdentityReport
from .polynomials import Poly, bell_poly, binomial_poly, laguerre
from .sequences import (
    STIRLING_FIRST,
    lah,
    lah_from_stirling,
    stirling_first,
    stirling_orthogonality_check,
    stirling_second,
)

logger = logging.getLogger(__name__)


class Suite(str, Enum):
    ALL = "all"
    POLYNOMIALS = "polynomials"
    ORTHOGONALITY = "orthogonality"
    TODOROV = "todorov"
    GOULD = "gould"
    GF = "gf"
    DERIVATIVES = "derivatives"
    EXPBELL = "expbell"


class Identity(str, Enum):
    LAGUERRE_LAH = "laguerre-lah"
    LAGUERRE_RODRIGUEZ = "laguerre-rodriguez"
    LAGUERRE_AT_ZERO = "laguerre-at-zero"
    RISING_TO_FALLING = "rising-to-falling"
    FALLING_TO_RISING = "falling-to-rising"
    FALLING_STIRLING = "falling-stirling"
    XD_POWER = "xd-power"
    LAH_ORTHOGONALITY = "lah-orthogonality"
    LAGUERRE_ORTHOGONALITY = "laguerre-orthogonality"
    STIRLING_ORTHOGONALITY = "stirling-orthogonality"
    LAH_FROM_STIRLING = "lah-from-stirling"
    TODOROV_CHARALAMBIDES = "todorov-charalambides"
    TODOROV_Z_MINUS_1 = "todorov-z-minus-1"
    TODOROV_GF = "todorov-gf"
    GOULD = "gould"
    LAH_COLUMN_GF = "lah-column-gf"
    LAGUERRE_GF = "laguerre-gf"
    LAGUERRE_ALPHA_GF = "laguerre-alpha-gf"
    BELL_GF = "bell-gf"
    DERIVATIVE_LAGUERRE = "derivative-laguerre"
    DERIVATIVE_SCHWATT = "derivative-schwatt"
    DERIVATIVE_EXPPOLY = "derivative-exppoly"
    SCHWATT_EXPPOLY = "schwatt-exppoly"
    TAYLOR_ORACLE = "taylor-oracle"
    BRYCHKOV_LAH = "brychkov-lah"
    BRYCHKOV_LEIBNIZ = "brychkov-leibniz"
    BRYCHKOV_ORACLE = "brychkov-oracle"
    LAH_EXPBELL = "lah-expbell"
    LAGUERRE_EXPBELL = "laguerre-expbell"


# ── orthogonality ─────────────────────────────────────────────────────────────

def _lah_double_sum(n: int, m: int) -> int:
    return sum(
        alt_sign(k + j) * lah(n, k) * lah(m, j) * factorial(k + j - 1)
        for k in range(1, n + 1)
        for j in range(1, m + 1)
    )


def lah_orthogonality_offdiag(n: int, m: int) -> int:
    """sum_k sum_j (-1)^(k+j) L(n,k) L(m,j) (k+j-1)!, which vanishes for n != m."""
    if n < 1 or m < 1:
        raise UsageError(f"n and m must be positive, got ({n}, {m})")
    if n == m:
        raise UsageError("n = m is the diagonal case; use lah_orthogonality_diag")
    return _lah_double_sum(n, m)


def lah_orthogonality_diag(n: int) -> Fraction:
    """The same double sum with m = n; equals (n!)^2 / n."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    return Fraction(_lah_double_sum(n, n))


def laguerre_orthogonality(alpha: int, n: int, m: int) -> Fraction:
    """Apply x^j -> (alpha + j)! to L_n^(alpha) L_m^(alpha).

    That functional is the weight x^alpha e^-x integrated over (0, inf), so
    the result is delta_nm (n + alpha)! / n!. alpha = -1 needs n, m >= 1.
    """
    if alpha < -1:
        raise UsageError(f"alpha must be an integer >= -1, got {alpha}")
    if alpha == -1 and (n < 1 or m < 1):
        raise UsageError("alpha = -1 needs n, m >= 1")
    product = laguerre(alpha, n) * laguerre(alpha, m)
    return sum(
        (c * factorial(alpha + j) for j, c in enumerate(product.coeffs) if c != 0),
        Fraction(0),
    )


def _laguerre_norm(alpha: int, n: int, m: int) -> Fraction:
    return Fraction(factorial(n + alpha), factorial(n)) if n == m else Fraction(0)


# ── Todorov–Charalambides and Gould ───────────────────────────────────────────

def _stirling_product_poly(n: int, m: int) -> Poly:
    # (m!/n!) sum_k s(n,k) S(k,m) z^k
    return Poly(stirling_first(n, k) * stirling_second(k, m) for k in range(n + 1)).scale(
        Fraction(factorial(m), factorial(n))
    )


def todorov_charalambides(n: int, m: int) -> Tuple[Poly, Poly]:
    """Both sides as polynomials in z; the right side uses binom(z j, n)."""
    if n < 0 or m < 0:
        raise UsageError(f"n and m must be nonnegative, got ({n}, {m})")
    lhs = _stirling_product_poly(n, m)
    rhs = Poly()
    for j in range(m + 1):
        rhs = rhs + binomial_poly(n, scale_by=j).scale(binomial(m, j) * alt_sign(j))
    return lhs, rhs.scale(alt_sign(m))


def todorov_specialization_z_minus1(n: int, m: int) -> IdentityReport:
    """Set z = -1 and follow the chain down to L(n, m).

    Both sides at z = -1 must equal (-1)^n C(n-1, m-1), as must the Gould
    form (-1)^(m+n) sum_j C(m,j) (-1)^j C(n+j-1, n); rescaling the left side
    by (n!/m!) (-1)^n recovers L(n, m).
    """
    if not 1 <= m <= n:
        raise UsageError(f"need 1 <= m <= n, got ({n}, {m})")
    lhs_poly, rhs_poly = todorov_charalambides(n, m)
    at_lhs, at_rhs = lhs_poly(-1), rhs_poly(-1)
    gould_form = alt_sign(m + n) * sum(
        binomial(m, j) * alt_sign(j) * binomial(n + j - 1, n) for j in range(m + 1)
    )
    recovered = at_lhs * Fraction(factorial(n), factorial(m)) * alt_sign(n)
    closed = alt_sign(n) * binomial(n - 1, m - 1)
    return IdentityReport.compare(
        Identity.TODOROV_Z_MINUS_1.value,
        (n, m),
        (recovered, at_lhs, at_rhs, gould_form),
        (lah(n, m), closed, closed, closed),
    )


def gould_identity(m: int, n: int) -> Tuple[Poly, Poly]:
    """sum_j C(m,j) (-1)^j binom(y+j, n) = (-1)^m binom(y, n-m), in y."""
    if n < 0 or m < 0:
        raise UsageError(f"m and n must be nonnegative, got ({m}, {n})")
    lhs = Poly()
    for j in range(m + 1):
        lhs = lhs + binomial_poly(n, shift=j).scale(binomial(m, j) * alt_sign(j))
    rhs = binomial_poly(n - m).scale(alt_sign(m)) if n >= m else Poly()
    return lhs, rhs


# ── exponential polynomials ───────────────────────────────────────────────────

def _signed_bell_sum(n: int, argument_sign: int) -> Poly:
    # sum_j s(n,j) (-1)^j phi_j(argument_sign * x)
    total = Poly()
    for j in range(n + 1):
        term = bell_poly(j)
        if argument_sign < 0:
            term = term.compose_scale(-1)
        total = total + term.scale(stirling_first(n, j) * alt_sign(j))
    return total


def lah_expbell_identity(n: int) -> Tuple[Poly, Poly]:
    """sum_k L(n,k) x^k against (-1)^n sum_j s(n,j) (-1)^j phi_j(x)."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    lhs = Poly([0] + [lah(n, k) for k in range(1, n + 1)])
    return lhs, _signed_bell_sum(n, 1).scale(alt_sign(n))


def laguerre_expbell_identity(n: int) -> Tuple[Poly, Poly]:
    """L_n^(-1)(x) against ((-1)^n / n!) sum_j s(n,j) (-1)^j phi_j(-x)."""
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    rhs = _signed_bell_sum(n, -1).scale(Fraction(alt_sign(n), factorial(n)))
    return laguerre(-1, n), rhs


# ── suite runner ──────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Check:
    suite: Suite
    identity: Identity
    params: Tuple[Any, ...]
    compute: Callable[[], Tuple[Any, Any]]


def _series_pair(check: Callable[[], series.SeriesCheck]) -> Callable[[], Tuple[Any, Any]]:
    def run() -> Tuple[Any, Any]:
        result = check()
        return result.extracted, result.expected

    return run


# Parameter grids for the derivative suite.
SCHWATT_C_GRID: Tuple[Fraction, ...] = tuple(Fraction(v) for v in ("1", "-1", "2", "1/2", "-3/2"))
SCHWATT_P_GRID: Tuple[Fraction, ...] = tuple(Fraction(v) for v in ("-1", "1", "2", "-2", "1/2"))
ORACLE_P_GRID: Tuple[int, ...] = (-2, -1, 1, 2, 3)
ORACLE_C_GRID: Tuple[Fraction, ...] = tuple(Fraction(v) for v in ("1", "-1", "1/2"))
ORACLE_X0_GRID: Tuple[Fraction, ...] = tuple(Fraction(v) for v in ("1", "1/2", "2", "3/4"))
SQRT_X0_GRID: Tuple[Fraction, ...] = tuple(Fraction(v) for v in ("1", "4", "9/4"))
BRYCHKOV_LAMBDAS: Tuple[int, ...] = (0, 1, 2)
BRYCHKOV_A_GRID: Tuple[int, ...] = (-1, 2)
LAGUERRE_AT_ZERO_ALPHAS: Tuple[Fraction, ...] = (Fraction(0), Fraction(1), Fraction(1, 2))
LAGUERRE_GF_ALPHAS: Tuple[Fraction, ...] = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-1, 2))
ORTHOGONALITY_ALPHAS: Tuple[int, ...] = (-1, 0, 1)


def _polynomial_checks(nmax: int) -> Iterator[Check]:
    s = Suite.POLYNOMIALS
    for n in range(nmax + 1):
        yield Check(s, Identity.LAGUERRE_LAH, (n,),
                    lambda n=n: (laguerre(-1, n), polynomials.laguerre_m1_lah(n)))
        yield Check(s, Identity.LAGUERRE_RODRIGUEZ, (n,),
                    lambda n=n: (laguerre(-1, n), polynomials.laguerre_rodriguez(-1, n)))
    for alpha in LAGUERRE_AT_ZERO_ALPHAS:
        for n in range(nmax + 1):
            yield Check(s, Identity.LAGUERRE_AT_ZERO, (alpha, n),
                        lambda a=alpha, n=n: (laguerre(a, n)(0), rising(a + 1, n) / factorial(n)))
    for n in range(1, nmax + 1):
        yield Check(s, Identity.LAGUERRE_AT_ZERO, (-1, n), lambda n=n: (laguerre(-1, n)(0), 0))
    for n in range(1, nmax + 1):
        yield Check(s, Identity.RISING_TO_FALLING, (n,),
                    lambda n=n: _conversion_sides(polynomials.rising_to_falling(n)))
        yield Check(s, Identity.FALLING_TO_RISING, (n,),
                    lambda n=n: _conversion_sides(polynomials.falling_to_rising(n)))
    for n in range(nmax + 1):
        yield Check(s, Identity.FALLING_STIRLING, (n,),
                    lambda n=n: (polynomials.falling_poly(n).coeffs, STIRLING_FIRST.row(n)))
        yield Check(s, Identity.XD_POWER, (n,),
                    lambda n=n: (polynomials.xD_power(n), bell_poly(n)))


def _conversion_sides(conversion: polynomials.BasisConversion) -> Tuple[Poly, Poly]:
    return conversion.expanded, conversion.target


def _orthogonality_checks(nmax: int) -> Iterator[Check]:
    s = Suite.ORTHOGONALITY
    for n in range(1, nmax + 1):
        for m in range(1, nmax + 1):
            if n == m:
                yield Check(s, Identity.LAH_ORTHOGONALITY, (n, m),
                            lambda n=n: (lah_orthogonality_diag(n), Fraction(factorial(n) ** 2, n)))
            else:
                yield Check(s, Identity.LAH_ORTHOGONALITY, (n, m),
                            lambda n=n, m=m: (lah_orthogonality_offdiag(n, m), 0))
    for alpha in ORTHOGONALITY_ALPHAS:
        start = 1 if alpha == -1 else 0
        for n in range(start, nmax + 1):
            for m in range(start, nmax + 1):
                yield Check(s, Identity.LAGUERRE_ORTHOGONALITY, (alpha, n, m),
                            lambda a=alpha, n=n, m=m: (laguerre_orthogonality(a, n, m), _laguerre_norm(a, n, m)))
    for n in range(nmax + 1):
        for m in range(n + 1):
            yield Check(s, Identity.STIRLING_ORTHOGONALITY, (n, m),
                        lambda n=n, m=m: (stirling_orthogonality_check(n, m), int(n == m)))


def _todorov_checks(nmax: int) -> Iterator[Check]:
    s = Suite.TODOROV
    for n in range(nmax + 1):
        for m in range(n + 1):
            yield Check(s, Identity.LAH_FROM_STIRLING, (n, m),
                        lambda n=n, m=m: (lah_from_stirling(n, m), lah(n, m)))
    for n in range(nmax + 1):
        for m in range(nmax + 1):
            yield Check(s, Identity.TODOROV_CHARALAMBIDES, (n, m),
                        lambda n=n, m=m: todorov_charalambides(n, m))
    for n in range(1, nmax + 1):
        for m in range(1, n + 1):
            yield Check(s, Identity.TODOROV_Z_MINUS_1, (n, m),
                        lambda n=n, m=m: _report_sides(todorov_specialization_z_minus1(n, m)))
    for m in range(nmax + 1):
        yield Check(s, Identity.TODOROV_GF, (m, nmax),
                    _series_pair(lambda m=m: series.todorov_gf_check(m, nmax)))


def _report_sides(report: IdentityReport) -> Tuple[str, str]:
    return report.lhs, report.rhs


def _gould_checks(nmax: int) -> Iterator[Check]:
    for m in range(nmax + 1):
        for n in range(nmax + 1):
            yield Check(Suite.GOULD, Identity.GOULD, (m, n), lambda m=m, n=n: gould_identity(m, n))


def _gf_checks(nmax: int) -> Iterator[Check]:
    s = Suite.GF
    for k in range(1, nmax + 1):
        yield Check(s, Identity.LAH_COLUMN_GF, (k, nmax),
                    _series_pair(lambda k=k: series.lah_column_gf_check(k, nmax)))
    yield Check(s, Identity.LAGUERRE_GF, (nmax,),
                _series_pair(lambda: series.laguerre_m1_gf_check(nmax)))
    for alpha in LAGUERRE_GF_ALPHAS:
        yield Check(s, Identity.LAGUERRE_ALPHA_GF, (alpha, nmax),
                    _series_pair(lambda a=alpha: series.laguerre_gf_check(a, nmax)))
    yield Check(s, Identity.BELL_GF, (nmax,), _series_pair(lambda: series.bell_gf_check(nmax)))


def _derivative_checks(nmax: int) -> Iterator[Check]:
    s = Suite.DERIVATIVES
    for n in range(nmax + 1):
        yield Check(s, Identity.DERIVATIVE_LAGUERRE, (n,),
                    lambda n=n: (derivatives.derive_via_lah(n).coeffs, derivatives.derive_via_laguerre(n).coeffs))
        yield Check(s, Identity.DERIVATIVE_SCHWATT, (n,),
                    lambda n=n: (derivatives.derive_via_lah(n).coeffs, derivatives.derive_via_schwatt(n, 1, -1).coeffs))
        yield Check(s, Identity.DERIVATIVE_EXPPOLY, (n,),
                    lambda n=n: (derivatives.derive_via_lah(n).coeffs, derivatives.derive_via_exppoly(n, 1, -1).coeffs))
    for c in SCHWATT_C_GRID:
        for p in SCHWATT_P_GRID:
            for n in range(nmax + 1):
                yield Check(s, Identity.SCHWATT_EXPPOLY, (n, c, p),
                            lambda n=n, c=c, p=p: (derivatives.derive_via_schwatt(n, c, p).coeffs,
                                                   derivatives.derive_via_exppoly(n, c, p).coeffs))
    for p in ORACLE_P_GRID:
        for c in ORACLE_C_GRID:
            for x0 in ORACLE_X0_GRID:
                for n in range(nmax + 1):
                    yield Check(s, Identity.TAYLOR_ORACLE, (n, c, p, x0),
                                lambda n=n, c=c, p=p, x0=x0: _oracle_sides(derivatives.derive_via_schwatt(n, c, p), x0))
    half = Fraction(1, 2)
    for c in ORACLE_C_GRID:
        for x0 in SQRT_X0_GRID:
            for n in range(nmax + 1):
                yield Check(s, Identity.TAYLOR_ORACLE, (n, c, half, x0),
                            lambda n=n, c=c, x0=x0: _oracle_sides(derivatives.derive_via_exppoly(n, c, half), x0))
    for n in range(nmax + 1):
        yield Check(s, Identity.BRYCHKOV_LAH, (n,),
                    lambda n=n: (derivatives.derive_brychkov(n, 0, -1).coeffs, derivatives.derive_via_lah(n).coeffs))
    for lam in BRYCHKOV_LAMBDAS:
        for a in BRYCHKOV_A_GRID:
            for n in range(nmax + 1):
                yield Check(s, Identity.BRYCHKOV_LEIBNIZ, (n, lam, a),
                            lambda n=n, lam=lam, a=a: (derivatives.derive_brychkov(n, lam, a).coeffs,
                                                       derivatives.derive_via_leibniz(n, -a, -1, lam).coeffs))
    for lam in (Fraction(1), Fraction(2), Fraction(1, 2)):
        for x0 in (Fraction(1), Fraction(4)):
            for n in range(nmax + 1):
                yield Check(s, Identity.BRYCHKOV_ORACLE, (n, lam, -1, x0),
                            lambda n=n, lam=lam, x0=x0: _oracle_sides(derivatives.derive_brychkov(n, lam, -1), x0))


def _oracle_sides(form, x0: Fraction) -> Tuple[Fraction, Fraction]:
    return derivatives.evaluate_form(form, x0), derivatives.taylor_oracle(form.spec, x0)


def _expbell_checks(nmax: int) -> Iterator[Check]:
    s = Suite.EXPBELL
    for n in range(1, nmax + 1):
        yield Check(s, Identity.LAH_EXPBELL, (n,), lambda n=n: lah_expbell_identity(n))
    for n in range(nmax + 1):
        yield Check(s, Identity.LAGUERRE_EXPBELL, (n,), lambda n=n: laguerre_expbell_identity(n))


_SUITE_BUILDERS = {
    Suite.POLYNOMIALS: _polynomial_checks,
    Suite.ORTHOGONALITY: _orthogonality_checks,
    Suite.TODOROV: _todorov_checks,
    Suite.GOULD: _gould_checks,
    Suite.GF: _gf_checks,
    Suite.DERIVATIVES: _derivative_checks,
    Suite.EXPBELL: _expbell_checks,
}


def build_checks(nmax: int, suites: Optional[Sequence[Suite]] = None) -> List[Check]:
    """Checks of the selected suites, in a fixed order."""
    if nmax < 1:
        raise UsageError(f"nmax must be positive, got {nmax}")
    selected = [Suite(s) for s in (suites or [Suite.ALL])]
    if Suite.ALL in selected:
        selected = list(_SUITE_BUILDERS)
    checks: List[Check] = []
    for suite in _SUITE_BUILDERS:
        if suite in selected:
            checks.extend(_SUITE_BUILDERS[suite](nmax))
    return checks


def run_check(check: Check) -> IdentityReport:
    start = time.perf_counter()
    lhs, rhs = check.compute()
    report = IdentityReport.compare(check.identity.value, check.params, lhs, rhs)
    metrics.record_check(check.suite.value, check.identity.value, report.status.value,
                         time.perf_counter() - start)
    if not report.passed:
        logger.warning("%s%s failed: lhs=%s rhs=%s", report.identity, tuple(report.params),
                       report.lhs, report.rhs)
    return report


def run_checks(checks: Iterable[Check], workers: int = 1) -> List[IdentityReport]:
    """Run checks, optionally on a thread pool; results keep the input order."""
    checks = list(checks)
    if workers <= 1:
        return [run_check(c) for c in checks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_check, checks))


def run_suite(nmax: int, suites: Optional[Sequence[Suite]] = None, workers: int = 1) -> List[IdentityReport]:
    """Every check of the selected suites up to ``nmax``; one report per check."""
    start = time.perf_counter()
    checks = build_checks(nmax, suites)
    reports = run_checks(checks, workers)
    failed = sum(1 for r in reports if not r.passed)
    logger.debug("ran %d checks (nmax=%d) in %.3fs, %d failed",
                 len(reports), nmax, time.perf_counter() - start, failed)
    return reports


def all_passed(reports: Iterable[IdentityReport]) -> bool:
    return all(r.passed for r in reports)
