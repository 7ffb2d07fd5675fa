"""Unit tests for the Lah and Stirling triangles."""

import math

import pytest
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from lahlab.errors import UsageError
from lahlab.models import TriangleKind
from lahlab.sequences import (
    LAH,
    Triangle,
    bell_number,
    lah,
    lah_by_recurrence,
    lah_from_stirling,
    stirling_first,
    stirling_orthogonality_check,
    stirling_second,
    triangle,
)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


# ── Triangle storage ──────────────────────────────────────────────────────────

class TestTriangle:
    @pytest.mark.parametrize("kind", list(TriangleKind))
    def test_row_zero_is_one(self, kind):
        assert Triangle.build(kind, 0).row(0) == (1,)

    def test_rows_have_n_plus_one_entries(self):
        t = Triangle.build(TriangleKind.STIRLING_SECOND, 6)
        assert [len(r) for r in t.rows(6)] == [1, 2, 3, 4, 5, 6, 7]

    def test_incremental_extension_matches_one_shot(self):
        grown = Triangle(TriangleKind.STIRLING_FIRST)
        for n in range(11):
            grown.extend_to(n)
        assert grown == Triangle.build(TriangleKind.STIRLING_FIRST, 10)

    def test_entry_above_diagonal_is_zero(self):
        assert Triangle.build(TriangleKind.LAH, 2).entry(2, 5) == 0

    def test_negative_index_is_usage_error(self):
        with pytest.raises(UsageError):
            LAH.entry(-1, 0)
        with pytest.raises(UsageError):
            LAH.extend_to(-1)

    def test_shared_triangles_by_kind(self):
        assert triangle("lah") is LAH
        assert triangle(TriangleKind.LAH) is LAH


# ── Lah numbers ───────────────────────────────────────────────────────────────

class TestLah:
    @pytest.mark.parametrize("n, k, expected", [(0, 0, 1), (3, 2, 6), (4, 2, 36), (4, 1, 24), (3, 0, 0)])
    def test_values(self, n, k, expected):
        assert lah(n, k) == expected

    def test_closed_form(self):
        for n in range(1, 16):
            for k in range(1, n + 1):
                assert lah(n, k) == math.factorial(n) // math.factorial(k) * math.comb(n - 1, k - 1)

    def test_recurrence_consistency(self):
        for n in range(1, 13):
            for k in range(1, n + 1):
                assert lah(n + 1, k) == (n + k) * lah(n, k) + lah(n, k - 1)
                assert lah_by_recurrence(n, k) == lah(n, k)

    def test_row_three(self):
        assert LAH.row(3) == (0, 6, 6, 1)


# ── Stirling numbers ──────────────────────────────────────────────────────────

class TestStirlingFirst:
    def test_values(self):
        assert stirling_first(3, 2) == -3
        assert stirling_first(3, 1) == 2

    @pytest.mark.parametrize("n", range(13))
    def test_diagonal(self, n):
        assert stirling_first(n, n) == 1

    def test_matches_sympy(self):
        for n in range(13):
            for k in range(n + 1):
                assert stirling_first(n, k) == sympy_stirling(n, k, kind=1, signed=True)


class TestStirlingSecond:
    def test_values(self):
        assert stirling_second(3, 2) == 3
        assert stirling_second(4, 2) == 7

    @pytest.mark.parametrize("n", range(1, 10))
    def test_single_block(self, n):
        assert stirling_second(n, 1) == 1

    def test_matches_sympy(self):
        for n in range(13):
            for k in range(n + 1):
                assert stirling_second(n, k) == sympy_stirling(n, k, kind=2)

    def test_bell_numbers(self):
        assert [bell_number(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]

    @pytest.mark.parametrize("n", range(9))
    def test_row_sums_count_set_partitions(self, n):
        blocks = [0] * (n + 1)
        for partition in _set_partitions(list(range(n))):
            blocks[len(partition)] += 1
        assert blocks == [stirling_second(n, k) for k in range(n + 1)]
        assert bell_number(n) == sum(blocks)


# ── Cross-triangle identities ─────────────────────────────────────────────────

class TestStirlingIdentities:
    @pytest.mark.parametrize("n, m, expected", [(5, 5, 1), (5, 3, 0), (1, 0, 0)])
    def test_orthogonality_examples(self, n, m, expected):
        assert stirling_orthogonality_check(n, m) == expected

    def test_orthogonality_range(self):
        for n in range(16):
            for m in range(n + 1):
                assert stirling_orthogonality_check(n, m) == int(n == m)

    @pytest.mark.parametrize("n, m, expected", [(3, 2, 6), (0, 0, 1), (4, 4, 1)])
    def test_lah_from_stirling_examples(self, n, m, expected):
        assert lah_from_stirling(n, m) == expected

    def test_lah_from_stirling_range(self):
        for n in range(16):
            for m in range(n + 1):
                assert lah_from_stirling(n, m) == lah(n, m)

    def test_corrupted_entry_breaks_round_trip(self, corrupted_lah):
        assert lah(3, 2) == 99
        assert lah_from_stirling(3, 2) != lah(3, 2)
