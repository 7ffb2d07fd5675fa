"""Integer triangles: Lah numbers and both kinds of Stirling numbers.

Rows are memoised per triangle and built strictly in order, so a triangle
extended row by row is identical to one built to the same row in one go.
Stirling numbers of the first kind are stored signed.
"""

from __future__ import annotations

import math
import threading
from typing import Dict, List, Tuple

from .errors import UsageError
from .exact import alt_sign, binomial
from .models import TriangleKind


def _lah_row(n: int, previous: List[int]) -> List[int]:
    # Closed form n!/k! * C(n-1, k-1); the recurrence is only used as a check.
    if n == 0:
        return [1]
    n_fact = math.factorial(n)
    return [0] + [n_fact // math.factorial(k) * binomial(n - 1, k - 1) for k in range(1, n + 1)]


def _stirling_first_row(n: int, previous: List[int]) -> List[int]:
    # s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
    if n == 0:
        return [1]
    row = []
    for k in range(n + 1):
        left = previous[k - 1] if k >= 1 else 0
        up = previous[k] if k < n else 0
        row.append(left - (n - 1) * up)
    return row


def _stirling_second_row(n: int, previous: List[int]) -> List[int]:
    # S(n, k) = k S(n-1, k) + S(n-1, k-1)
    if n == 0:
        return [1]
    row = []
    for k in range(n + 1):
        left = previous[k - 1] if k >= 1 else 0
        up = previous[k] if k < n else 0
        row.append(k * up + left)
    return row


_ROW_BUILDERS = {
    TriangleKind.LAH: _lah_row,
    TriangleKind.STIRLING_FIRST: _stirling_first_row,
    TriangleKind.STIRLING_SECOND: _stirling_second_row,
}


class Triangle:
    """Lazily extended integer triangle; row n holds entries for k = 0..n."""

    def __init__(self, kind: TriangleKind) -> None:
        self.kind = TriangleKind(kind)
        self._rows: List[List[int]] = []
        self._lock = threading.Lock()

    @classmethod
    def build(cls, kind: TriangleKind, nmax: int) -> "Triangle":
        triangle = cls(kind)
        triangle.extend_to(nmax)
        return triangle

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.kind is other.kind and self._rows == other._rows

    def __repr__(self) -> str:
        return f"Triangle({self.kind.value!r}, rows={len(self._rows)})"

    def extend_to(self, nmax: int) -> None:
        if nmax < 0:
            raise UsageError(f"row index must be nonnegative, got {nmax}")
        if nmax < len(self._rows):
            return
        builder = _ROW_BUILDERS[self.kind]
        with self._lock:
            while len(self._rows) <= nmax:
                n = len(self._rows)
                previous = self._rows[-1] if self._rows else []
                self._rows.append(builder(n, previous))

    def row(self, n: int) -> Tuple[int, ...]:
        self.extend_to(n)
        return tuple(self._rows[n])

    def rows(self, nmax: int) -> List[Tuple[int, ...]]:
        self.extend_to(nmax)
        return [tuple(r) for r in self._rows[: nmax + 1]]

    def entry(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise UsageError(f"indices must be nonnegative, got ({n}, {k})")
        if k > n:
            return 0
        self.extend_to(n)
        return self._rows[n][k]


LAH = Triangle(TriangleKind.LAH)
STIRLING_FIRST = Triangle(TriangleKind.STIRLING_FIRST)
STIRLING_SECOND = Triangle(TriangleKind.STIRLING_SECOND)

_TRIANGLES: Dict[TriangleKind, Triangle] = {
    TriangleKind.LAH: LAH,
    TriangleKind.STIRLING_FIRST: STIRLING_FIRST,
    TriangleKind.STIRLING_SECOND: STIRLING_SECOND,
}


def triangle(kind: TriangleKind) -> Triangle:
    """Shared memoised triangle of the given kind."""
    return _TRIANGLES[TriangleKind(kind)]


def lah(n: int, k: int) -> int:
    return LAH.entry(n, k)


def stirling_first(n: int, k: int) -> int:
    """Signed s(n, k): falling(x, n) = sum_k s(n, k) x^k."""
    return STIRLING_FIRST.entry(n, k)


def stirling_second(n: int, k: int) -> int:
    return STIRLING_SECOND.entry(n, k)


def stirling_orthogonality_check(n: int, m: int) -> int:
    """sum_k s(n, k) S(k, m); equals 1 when m = n and 0 otherwise."""
    return sum(stirling_first(n, k) * stirling_second(k, m) for k in range(n + 1))


def lah_from_stirling(n: int, m: int) -> int:
    """(-1)^n sum_k s(n, k) S(k, m) (-1)^k, which reproduces L(n, m)."""
    total = sum(
        stirling_first(n, k) * stirling_second(k, m) * alt_sign(k) for k in range(n + 1)
    )
    return alt_sign(n) * total


def lah_by_recurrence(n: int, k: int) -> int:
    """L(n, k) from L(n+1, k) = (n+k) L(n, k) + L(n, k-1), starting at L(0, 0) = 1."""
    if n < 0 or k < 0:
        raise UsageError(f"indices must be nonnegative, got ({n}, {k})")
    row = [1]
    for m in range(n):
        nxt = [0] * (m + 2)
        for j in range(1, m + 2):
            up = row[j] if j <= m else 0
            nxt[j] = (m + j) * up + row[j - 1]
        row = nxt
    return row[k] if k <= n else 0


def bell_number(n: int) -> int:
    return sum(STIRLING_SECOND.row(n))
