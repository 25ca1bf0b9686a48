"""Euler–Maclaurin reference engine for ``zeta(s, a)`` and ``gamma_k(a)``.

This module is the independent oracle: every closed form elsewhere in the
package is tested against the values computed here.
"""

from __future__ import annotations

import enum
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._backend import kernels
from .combinatorics import bernoulli_number
from .errors import DomainError, PoleError, RangeError
from .policy import DEFAULT_POLICY, PrecisionPolicy

EPS = sys.float_info.epsilon

# beyond this the direct Dirichlet series converges faster than Euler-Maclaurin
DIRECT_SERIES_MIN_S = 30.0
SMALL_A = 1.0 / 24.0
NEG_S_MIN_DIRECT = 10
MAX_STIELTJES_INDEX = 5


@dataclass(frozen=True)
class RationalArg:
    """Argument ``num/den`` kept unreduced, so (2, 4) and (1, 2) stay distinct."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1 or self.num < 1:
            raise DomainError(f"rational argument needs positive parts, got {self.num}/{self.den}")

    @property
    def as_real(self) -> float:
        return self.num / self.den

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @classmethod
    def parse(cls, text: str) -> "RationalArg":
        m = re.fullmatch(r"\s*(\d+)\s*/\s*(\d+)\s*", text)
        if not m:
            raise DomainError(f"cannot parse {text!r} as j/m")
        return cls(int(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


class Method(str, enum.Enum):
    ORACLE = "oracle"
    CLOSED_FORM = "closed_form"
    ASYMPTOTIC = "asymptotic"
    MULTIPLICATION = "multiplication"


@dataclass(frozen=True)
class StieltjesValue:
    k: int
    a: float
    value: float
    method: Method
    err_estimate: float = 0.0

    def __post_init__(self):
        if not self.err_estimate >= 0:
            raise DomainError("err_estimate must be non-negative")

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class EulerMaclaurinPlan:
    direct_terms: int = DEFAULT_POLICY.em_direct_terms
    tail_order: int = DEFAULT_POLICY.em_tail_order
    derivative_order: int = 0

    def __post_init__(self):
        if self.direct_terms < 1:
            raise DomainError("direct_terms must be positive")
        if self.tail_order < 2 or self.tail_order % 2:
            raise DomainError("tail_order must be a positive even integer")
        if not 0 <= self.derivative_order <= 3:
            raise RangeError("derivative_order must be in 0..3")

    @classmethod
    def from_policy(cls, policy: PrecisionPolicy, derivative_order: int = 0) -> "EulerMaclaurinPlan":
        return cls(policy.em_direct_terms, policy.em_tail_order, derivative_order)


DEFAULT_PLAN = EulerMaclaurinPlan()


@lru_cache(maxsize=None)
def _tail_coefficients(tail_order: int) -> tuple[float, ...]:
    # B_{2j} / (2j)!  for j = 1..tail_order/2
    return tuple(
        float(bernoulli_number(2 * j) / math.factorial(2 * j))
        for j in range(1, tail_order // 2 + 1)
    )


def _pochhammer_derivs(s: float, length: int, max_order: int) -> list[float]:
    """Values of d^r/ds^r (s)_length for r = 0..max_order.

    Built by multiplying in one factor (s+i) at a time with the product rule,
    which stays finite at s = 0 where logarithmic derivatives break down.
    """
    d = [1.0] + [0.0] * max_order
    for i in range(length):
        f = s + i
        for r in range(max_order, 0, -1):
            d[r] = d[r] * f + r * d[r - 1]
        d[0] *= f
    return d


def _check_sa(s: float, a: float) -> None:
    if s == 1:
        raise PoleError("zeta(s, a) has a pole at s = 1")
    if not a > 0:
        raise DomainError(f"Hurwitz zeta needs a > 0, got {a!r}")


def hurwitz_derivs(s: float, a: float, max_order: int = 0,
                   plan: EulerMaclaurinPlan | None = None) -> tuple[list[float], float]:
    """All ``d^r/ds^r zeta(s, a)`` for ``r = 0..max_order`` plus an error estimate.

    Term-wise analytic differentiation of the Euler–Maclaurin formula; for
    large ``s`` the plain Dirichlet series is summed instead. For ``s < 0``
    the plan's direct-term count is treated as an upper bound and lowered
    to the smallest count that keeps the tail convergent, which limits
    cancellation. Relative accuracy still degrades as ``s`` falls below
    about -3; the returned error estimate reflects this.
    """
    _check_sa(s, a)
    if not 0 <= max_order <= 3:
        raise RangeError("s-derivative order must be in 0..3")
    plan = plan or DEFAULT_PLAN

    if s >= DIRECT_SERIES_MIN_S:
        sums, _ = kernels.dirichlet_series_sums(s, a, max_order, EPS / 16, 1_000_000)
        return list(sums), EPS * abs(sums[0])

    n = plan.direct_terms
    if s < 0:
        # partial sums grow like y^(1-s) and cancel; keep y just large enough for the tail
        n = min(n, max(NEG_S_MIN_DIRECT, math.ceil((plan.tail_order - s) / 3)))
    y = n + a
    lg = math.log(y)
    direct = kernels.dirichlet_deriv_sums(s, a, n, max_order)

    t = s - 1.0
    ypow = y ** (-s)
    pole_base = y * ypow  # y^{1-s}
    out = []
    err = 0.0
    for r in range(max_order + 1):
        # d^r [y^{-t} / t]
        pole = math.fsum(
            math.comb(r, i) * (-lg) ** (r - i) * (-1) ** i * math.factorial(i) / t ** (i + 1)
            for i in range(r + 1)
        ) * pole_base
        half = 0.5 * (-lg) ** r * ypow
        tail_terms = []
        for j, c in enumerate(_tail_coefficients(plan.tail_order), start=1):
            length = 2 * j - 1
            pd = _pochhammer_derivs(s, length, r)
            base = y ** (-s - length)
            term = c * base * math.fsum(
                math.comb(r, i) * pd[i] * (-lg) ** (r - i) for i in range(r + 1)
            )
            tail_terms.append(term)
        out.append(math.fsum([direct[r], pole, half] + tail_terms))
        err = max(err, abs(tail_terms[-1]) + 4 * EPS * (abs(direct[r]) + abs(pole)))
    return out, err


def hurwitz_zeta(s: float, a: float, plan: EulerMaclaurinPlan | None = None) -> float:
    """Hurwitz zeta ``zeta(s, a)`` for real ``s != 1`` and ``a > 0``."""
    return hurwitz_derivs(s, a, 0, plan)[0][0]


def hurwitz_zeta_sderiv(order: int, s: float, a: float,
                        plan: EulerMaclaurinPlan | None = None) -> float:
    """``d^order/ds^order zeta(s, a)`` for ``order`` in 1..3."""
    if not 1 <= order <= 3:
        raise RangeError("order must be 1, 2 or 3")
    return hurwitz_derivs(s, a, order, plan)[0][order]


@lru_cache(maxsize=None)
def _log_over_y_coeffs(k: int, nmax: int) -> tuple[tuple[int, ...], ...]:
    """Coefficients c[n][i] with d^n/dy^n (ln^k y / y) = y^{-1-n} sum_i c[n][i] ln^i y."""
    rows = [tuple(1 if i == k else 0 for i in range(k + 1))]
    for n in range(nmax):
        prev = rows[-1]
        rows.append(tuple(
            -(n + 1) * prev[i] + ((i + 1) * prev[i + 1] if i < k else 0)
            for i in range(k + 1)
        ))
    return tuple(rows)


def _stieltjes_em(k: int, a: float, plan: EulerMaclaurinPlan) -> tuple[float, float]:
    n = plan.direct_terms
    y = n + a
    lg = math.log(y)
    direct = kernels.log_power_sum(a, n, k)
    integral = lg ** (k + 1) / (k + 1)
    half = 0.5 * lg**k / y
    coeffs = _log_over_y_coeffs(k, plan.tail_order)
    tail = []
    for j, c in enumerate(_tail_coefficients(plan.tail_order), start=1):
        order = 2 * j - 1
        poly = math.fsum(ci * lg**i for i, ci in enumerate(coeffs[order]))
        tail.append(-c * poly * y ** (-1 - order))
    value = math.fsum([direct, -integral, half] + tail)
    err = abs(tail[-1]) + 4 * EPS * (abs(direct) + abs(integral))
    return value, err


def stieltjes_oracle(k: int, a: float, plan: EulerMaclaurinPlan | None = None) -> StieltjesValue:
    """``gamma_k(a)`` from Euler–Maclaurin applied to ``ln^k(x+a)/(x+a)``.

    For ``a < 1/24`` the value is shifted up by one first, since the
    ``ln^k(a)/a`` blow-up makes direct summation lose digits.
    """
    if not 0 <= k <= MAX_STIELTJES_INDEX:
        raise RangeError(f"oracle supports 0 <= k <= {MAX_STIELTJES_INDEX}")
    if not a > 0:
        raise DomainError(f"gamma_k(a) needs a > 0, got {a!r}")
    plan = plan or DEFAULT_PLAN
    if a < SMALL_A:
        up = stieltjes_oracle(k, a + 1.0, plan)
        corr = math.log(a) ** k / a
        value = up.value + corr
        return StieltjesValue(k, a, value, Method.ORACLE, up.err_estimate + EPS * abs(corr))
    value, err = _stieltjes_em(k, a, plan)
    return StieltjesValue(k, a, value, Method.ORACLE, err)


def stieltjes_shift(k: int, a: float, n: int, value: float | None = None) -> float:
    """``gamma_k(a+n)`` from ``gamma_k(a)`` by the finite-sum shift.

    ``value`` is ``gamma_k(a)``; the oracle supplies it when omitted.
    """
    if not a > 0:
        raise DomainError("shift needs a > 0")
    if n < 0:
        raise DomainError("shift count must be non-negative")
    if value is None:
        value = stieltjes_oracle(k, a).value
    terms = [value] + [-(math.log(a + j) ** k) / (a + j) for j in range(n)]
    return math.fsum(terms)


@lru_cache(maxsize=None)
def stieltjes_constant(k: int) -> float:
    """Cached ``gamma_k = gamma_k(1)``; ``gamma_0`` is Euler's constant."""
    return stieltjes_oracle(k, 1.0).value


def euler_gamma() -> float:
    return stieltjes_constant(0)
