"""Classic exact counting numbers.

Binomials, multinomials, Stirling numbers of the second kind (plain and
cumulative), Bell numbers and falling factorials.  Everything is exact
Python ``int`` arithmetic; Stirling rows are memoized in a growable table.
"""

from __future__ import annotations

import math
import threading
from typing import Iterable

__all__ = [
    "StirlingTable",
    "binomial",
    "multinomial",
    "stirling2",
    "stirling2_cumulative",
    "bell",
    "falling_factorial",
]


class StirlingTable:
    """Triangular table of (r-)Stirling numbers of the second kind.

    With ``r == 0`` entry ``(n, k)`` is ``S(n, k)``; with ``r >= 1`` it is the
    r-Stirling number (elements ``1..r`` in distinct blocks), whose rows start
    at ``n == r`` with a single 1 at ``k == r``.  Both follow
    ``T(n, k) = T(n-1, k-1) + k T(n-1, k)`` above the base row.

    Rows are appended on demand and never discarded.  Population is
    serialized by a lock; completed rows are immutable tuples.
    """

    def __init__(self, max_n: int = 0, r: int = 0):
        self.r = r
        self._rows: list[tuple[int, ...]] = [(0,) * r + (1,)]
        self._lock = threading.Lock()
        self.ensure(max_n)

    @property
    def max_n(self) -> int:
        return self.r + len(self._rows) - 1

    def ensure(self, n: int) -> None:
        if n <= self.max_n:
            return
        with self._lock:
            rows = self._rows
            while self.r + len(rows) <= n:
                prev = rows[-1]
                m = len(prev)
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    row[k] = prev[k - 1] + (k * prev[k] if k < m else 0)
                rows.append(tuple(row))

    def row(self, n: int) -> tuple[int, ...]:
        if n < self.r:
            return (0,) * (n + 1)
        self.ensure(n)
        return self._rows[n - self.r]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if n < self.r or k < 0 or k > n:
            return 0
        return self.row(n)[k]


_TABLE = StirlingTable()


def _check_nonneg(**kw: int) -> None:
    for name, v in kw.items():
        if v < 0:
            from .errors import InvalidArgument

            raise InvalidArgument(f"{name} must be nonnegative, got {v}")


def binomial(n: int, k: int) -> int:
    """``C(n, k)``; zero when ``k > n``."""
    _check_nonneg(n=n, k=k)
    return math.comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """``(sum parts)! / prod(part!)``."""
    total = 0
    result = 1
    for p in parts:
        _check_nonneg(part=p)
        total += p
        result *= math.comb(total, p)
    return result


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, 0 for ``k > n``."""
    _check_nonneg(n=n, k=k)
    return _TABLE[n, k]


def stirling2_cumulative(n: int, k: int) -> int:
    """Sum of ``S(n, i)`` for ``1 <= i <= k``.

    For ``n == 0`` this returns 1 for every ``k`` (the "no balls, cells may
    stay empty" convention); for ``n > 0`` and ``k == 0`` the sum is empty.
    """
    _check_nonneg(n=n, k=k)
    if n == 0:
        return 1
    row = _TABLE.row(n)
    return sum(row[1 : min(k, n) + 1])


def bell(n: int) -> int:
    _check_nonneg(n=n)
    return sum(_TABLE.row(n))


def falling_factorial(x: int, k: int) -> int:
    """``x (x-1) ... (x-k+1)``; ``x`` may be negative."""
    _check_nonneg(k=k)
    out = 1
    for i in range(k):
        out *= x - i
    return out
