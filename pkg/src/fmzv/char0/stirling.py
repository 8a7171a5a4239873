"""Stirling numbers of the first (unsigned) and second kind."""
from __future__ import annotations

from functools import lru_cache
from typing import Literal

DEFAULT_BOUND = 64


class StirlingTable:
    """Triangular tables [n m] and {n m} for 0 <= m <= n <= n_max.

    Built by the recurrences
        [n+1, m] = n [n, m] + [n, m-1],    {n+1, m} = m {n, m} + {n, m-1}.
    """

    def __init__(self, n_max: int):
        if n_max < 0:
            raise ValueError("n_max must be non-negative")
        self.n_max = n_max
        first = [[1]]
        second = [[1]]
        for n in range(n_max):
            f_prev, s_prev = first[-1], second[-1]
            f_row, s_row = [0] * (n + 2), [0] * (n + 2)
            for m in range(n + 2):
                f_keep = f_prev[m] if m <= n else 0
                s_keep = s_prev[m] if m <= n else 0
                f_down = f_prev[m - 1] if m >= 1 else 0
                s_down = s_prev[m - 1] if m >= 1 else 0
                f_row[m] = n * f_keep + f_down
                s_row[m] = m * s_keep + s_down
            first.append(f_row)
            second.append(s_row)
        self._first = first
        self._second = second

    def _lookup(self, rows, n: int, m: int) -> int:
        if n < 0 or m < 0:
            raise IndexError(f"negative argument ({n}, {m})")
        if n > self.n_max:
            raise IndexError(f"n={n} exceeds table bound {self.n_max}")
        return rows[n][m] if m <= n else 0

    def first(self, n: int, m: int) -> int:
        return self._lookup(self._first, n, m)

    def second(self, n: int, m: int) -> int:
        return self._lookup(self._second, n, m)

    def validate(self) -> None:
        """Check both tables against their generating polynomials/series."""
        from fractions import Fraction
        from math import factorial

        from ..series import TruncSeries

        # x(x+1)...(x+n-1) = sum_m [n m] x^m
        poly = [1]
        for n in range(self.n_max + 1):
            if poly != [self.first(n, m) for m in range(n + 1)]:
                raise AssertionError(f"first-kind row {n} disagrees with the rising factorial")
            nxt = [0] * (len(poly) + 1)
            for m, c in enumerate(poly):
                nxt[m + 1] += c
                nxt[m] += n * c
            poly = nxt
        # (e^x - 1)^m = m! sum_n {n m} x^n / n!
        N = self.n_max
        em1 = TruncSeries([Fraction(0)] + [Fraction(1)] * N, egf=True)
        power = TruncSeries.constant(Fraction(1), N, egf=True)
        for m in range(N + 1):
            for n in range(N + 1):
                if power[n] != factorial(m) * self.second(n, m):
                    raise AssertionError(f"second-kind entry ({n}, {m}) disagrees with (e^x-1)^m")
            power = power * em1


@lru_cache(maxsize=None)
def stirling_table(n_max: int = DEFAULT_BOUND) -> StirlingTable:
    return StirlingTable(n_max)


def stirling(kind: Literal["first", "second"], n: int, m: int, n_max: int = DEFAULT_BOUND) -> int:
    """Look up a Stirling number in the shared table of bound ``n_max``.

    >>> stirling("second", 3, 2)
    3
    >>> stirling("first", 4, 2)
    11
    """
    table = stirling_table(n_max)
    if kind == "first":
        return table.first(n, m)
    if kind == "second":
        return table.second(n, m)
    raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
