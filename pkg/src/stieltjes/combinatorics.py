"""Exact Bernoulli, Stirling and harmonic-number tables.

All values here are exact (``fractions.Fraction`` or ``int``); floating point
only appears when a polynomial is evaluated at a real argument.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

from .errors import RangeError

BERNOULLI_NMAX = 64
STIRLING_NMAX = 512


class BernoulliTable:
    """Bernoulli numbers ``B_0..B_nmax`` with the ``B_1 = -1/2`` convention."""

    def __init__(self, nmax: int = BERNOULLI_NMAX):
        self.nmax = nmax
        values = [Fraction(1)]
        for n in range(1, nmax + 1):
            # sum_{j<=n} C(n+1, j) B_j = 0
            acc = sum(math.comb(n + 1, j) * values[j] for j in range(n))
            values.append(-acc / (n + 1))
        self.values = tuple(values)
        # coefficients of B_n(x) in increasing powers of x
        self.poly = tuple(
            tuple(math.comb(n, k) * values[n - k] for k in range(n + 1))
            for n in range(nmax + 1)
        )

    def _check(self, n: int) -> None:
        if n < 0 or n > self.nmax:
            raise RangeError(f"Bernoulli index {n} outside 0..{self.nmax}")

    def number(self, n: int) -> Fraction:
        self._check(n)
        return self.values[n]

    def polynomial(self, n: int, x: float) -> float:
        self._check(n)
        acc = 0.0
        for c in reversed(self.poly[n]):
            acc = acc * x + float(c)
        return acc


class StirlingTable:
    """Signed Stirling numbers of the first kind, rows grown on demand."""

    def __init__(self, nmax: int = STIRLING_NMAX):
        self.nmax = nmax
        self._rows = [[1]]
        self._lock = threading.Lock()

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                prev = rows[-1]
                m = len(rows) - 1
                row = [0] * (m + 2)
                for k in range(1, m + 2):
                    left = prev[k - 1]
                    right = prev[k] if k <= m else 0
                    row[k] = left - m * right
                rows.append(row)

    def row(self, n: int) -> list[int]:
        if n < 0 or n > self.nmax:
            raise RangeError(f"Stirling row {n} outside 0..{self.nmax}")
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            raise RangeError(f"Stirling column {k} outside 0..{n}")
        return self.row(n)[k]


BERNOULLI = BernoulliTable()
STIRLING = StirlingTable()


def bernoulli_number(n: int) -> Fraction:
    """Return ``B_n`` as an exact rational (``B_1 = -1/2``)."""
    return BERNOULLI.number(n)


def bernoulli_polynomial(n: int, x: float) -> float:
    return BERNOULLI.polynomial(n, x)


def periodic_bernoulli(n: int, x: float) -> float:
    """``P_n(x) = B_n(x - floor(x))``, the 1-periodic extension."""
    if n < 1:
        raise RangeError("periodic Bernoulli functions start at n = 1")
    return BERNOULLI.polynomial(n, x - math.floor(x))


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind ``s(n, k)``."""
    return STIRLING(n, k)


@lru_cache(maxsize=4096)
def stirling_factorial_ratio(n: int, k: int) -> float:
    """``s(n, k) / (n-1)!`` as a float, for ``n >= 1``.

    The ratio stays moderate even where ``s(n, k)`` itself overflows a double.
    """
    if n < 1:
        raise RangeError("ratio defined for n >= 1")
    return float(Fraction(stirling_first(n, k), math.factorial(n - 1)))


def generalized_harmonic(n: int, r: int = 1) -> Fraction:
    """``H_n^{(r)} = sum_{k=1}^n k^{-r}`` exactly."""
    if n < 0 or r < 1:
        raise RangeError("generalized_harmonic needs n >= 0 and r >= 1")
    return sum((Fraction(1, k**r) for k in range(1, n + 1)), Fraction(0))
