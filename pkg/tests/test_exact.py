"""Unit tests for the exact scalar primitives."""

from fractions import Fraction

import pytest

from lahlab.errors import DomainError, UsageError
from lahlab.exact import (
    binomial,
    factorial,
    falling,
    format_rational,
    gen_binomial,
    rational_power,
    rising,
    to_rational,
)


# ── Parsing & formatting ───────────────────────────────────────────────────────

class TestToRational:
    @pytest.mark.parametrize("text, expected", [
        ("3", Fraction(3)),
        ("-1", Fraction(-1)),
        ("1/2", Fraction(1, 2)),
        ("-3/2", Fraction(-3, 2)),
        ("4/6", Fraction(2, 3)),
        (" 7 ", Fraction(7)),
    ])
    def test_accepts_exact_literals(self, text, expected):
        assert to_rational(text) == expected

    def test_passes_fractions_and_ints_through(self):
        assert to_rational(Fraction(5, 7)) == Fraction(5, 7)
        assert to_rational(-4) == Fraction(-4)

    @pytest.mark.parametrize("bad", ["0.5", "1e3", "abc", "1/-2", "", "1/2/3"])
    def test_rejects_inexact_or_malformed_strings(self, bad):
        with pytest.raises(UsageError):
            to_rational(bad)

    def test_rejects_zero_denominator(self):
        with pytest.raises(UsageError, match="zero denominator"):
            to_rational("1/0")

    def test_rejects_floats_and_bools(self):
        with pytest.raises(UsageError):
            to_rational(0.5)
        with pytest.raises(UsageError):
            to_rational(True)


class TestFormatRational:
    def test_integers_have_no_denominator(self):
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(-5) == "-5"

    def test_lowest_terms_positive_denominator(self):
        assert format_rational(Fraction(2, -4)) == "-1/2"

    @pytest.mark.parametrize("text", ["-1/6", "3", "0", "22/7"])
    def test_parse_then_format_is_identity(self, text):
        assert format_rational(to_rational(text)) == text


# ── Factorials & binomials ────────────────────────────────────────────────────

class TestFactorial:
    @pytest.mark.parametrize("n, expected", [(0, 1), (5, 120), (12, 479001600)])
    def test_values(self, n, expected):
        assert factorial(n) == expected

    def test_negative_is_usage_error(self):
        with pytest.raises(UsageError):
            factorial(-1)


class TestBinomial:
    def test_pascal_value(self):
        assert binomial(4, 2) == 6

    @pytest.mark.parametrize("n", range(8))
    def test_choose_zero(self, n):
        assert binomial(n, 0) == 1

    def test_out_of_range_is_zero(self):
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0

    def test_agrees_with_generalised_binomial(self):
        for n in range(21):
            for k in range(n + 1):
                assert gen_binomial(n, k) == binomial(n, k)


class TestGenBinomial:
    def test_negative_upper(self):
        assert gen_binomial(-2, 3) == -4 == (-1) ** 3 * binomial(4, 3)

    def test_half(self):
        assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)

    def test_empty_product(self):
        assert gen_binomial(Fraction(7, 3), 0) == 1

    def test_negation_rule(self):
        for j in range(1, 13):
            for n in range(1, 13):
                assert gen_binomial(-j, n) == (-1) ** n * binomial(n + j - 1, n)


class TestRisingFalling:
    def test_values(self):
        assert rising(3, 3) == 60
        assert falling(3, 3) == 6
        assert rising(Fraction(5, 2), 0) == 1

    @pytest.mark.parametrize("x", ["1/2", "-3/4", "7", "-11/5", "2/9", "0", "13/3", "-1", "5/8", "-7/2"])
    def test_falling_is_signed_rising_of_negation(self, x):
        value = to_rational(x)
        for n in range(13):
            assert falling(value, n) == (-1) ** n * rising(-value, n)


# ── Rational powers ───────────────────────────────────────────────────────────

class TestRationalPower:
    def test_integer_exponents(self):
        assert rational_power(Fraction(2, 3), 2) == Fraction(4, 9)
        assert rational_power(2, -2) == Fraction(1, 4)

    def test_exact_roots(self):
        assert rational_power(Fraction(9, 4), Fraction(1, 2)) == Fraction(3, 2)
        assert rational_power(4, Fraction(-3, 2)) == Fraction(1, 8)
        assert rational_power(-8, Fraction(1, 3)) == -2

    def test_irrational_result_is_domain_error(self):
        with pytest.raises(DomainError, match="not rational"):
            rational_power(2, Fraction(1, 2))

    def test_even_root_of_negative_is_domain_error(self):
        with pytest.raises(DomainError):
            rational_power(-4, Fraction(1, 2))

    def test_zero_base(self):
        assert rational_power(0, 3) == 0
        with pytest.raises(DomainError):
            rational_power(0, -1)
