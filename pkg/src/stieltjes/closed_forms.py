"""Closed forms for gamma_1(j/m), gamma_2(j/m), their sums and transforms,
multiplication series, and small-argument asymptotics."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import stirling_factorial_ratio
from .errors import DomainError, RangeError
from .hurwitz import (
    MAX_STIELTJES_INDEX,
    Method,
    RationalArg,
    StieltjesValue,
    euler_gamma,
    hurwitz_derivs,
    stieltjes_constant,
    stieltjes_oracle,
    stieltjes_shift,
)
from .policy import DEFAULT_POLICY
from .specialfn import LN_2PI, digamma, log_gamma, polygamma, trig_2pi

EPS = sys.float_info.epsilon
ZETA2 = math.pi**2 / 6


@dataclass(frozen=True)
class HurwitzZeroDerivs:
    """zeta(0, a) and its first three s-derivatives at s = 0."""

    a: float
    d0: float
    d1: float
    d2: float
    d3: float
    err_estimate: float = 0.0


@lru_cache(maxsize=4096)
def _zero_derivs(a: float) -> HurwitzZeroDerivs:
    vals, err = hurwitz_derivs(0.0, a, 3)
    return HurwitzZeroDerivs(a, 0.5 - a, log_gamma(a) - 0.5 * LN_2PI, vals[2], vals[3], err)


def hurwitz_derivs_at_zero(r: RationalArg | float) -> HurwitzZeroDerivs:
    a = r.as_real if isinstance(r, RationalArg) else float(r)
    if not 0 < a <= 1:
        raise DomainError(f"need 0 < a <= 1, got {a!r}")
    return _zero_derivs(a)


def _check_jm(j: int, m: int) -> None:
    if m <= 1 or not 0 < j < m:
        raise DomainError(f"closed forms need m > 1 and 0 < j < m, got j={j}, m={m}")


def gamma1_rational(j: int, m: int) -> StieltjesValue:
    """gamma_1(j/m) from a finite sum over ln Gamma(r/m) and zeta''(0, r/m)."""
    _check_jm(j, m)
    g = euler_gamma()
    g1 = stieltjes_constant(1)
    lm = math.log(m)
    big_l = g + math.log(2 * math.pi * m)
    terms = [g1, g * g, g * math.log(2 * math.pi * m), LN_2PI * lm, lm * lm / 2,
             big_l * digamma(j / m)]
    err = 0.0
    for r in range(1, m):
        c, s = trig_2pi(j * r, m)
        zd = _zero_derivs(r / m)
        terms.append(math.pi * s * log_gamma(r / m))
        terms.append(c * zd.d2)
        err += zd.err_estimate
    err += 8 * EPS * math.fsum(abs(t) for t in terms)
    return StieltjesValue(1, j / m, math.fsum(terms), Method.CLOSED_FORM, err)


def gamma2_rational(j: int, m: int) -> StieltjesValue:
    """gamma_2(j/m), including the cotangent-carrying A term."""
    _check_jm(j, m)
    g = euler_gamma()
    g1 = stieltjes_constant(1)
    g2 = stieltjes_constant(2)
    lm = math.log(m)
    big_l = g + math.log(2 * math.pi * m)
    bracket = ZETA2 + big_l * big_l
    psi = digamma(j / m)
    pi2 = math.pi**2

    half = [g2 / 2, -g1 * lm, g / 8 * pi2, pi2 / 8 * lm, g / 2 * lm * lm, lm**3 / 6]
    a_terms = [math.pi**3 / 24 / math.tan(math.pi * j / m), pi2 / 8 * psi]
    err = 0.0
    for r in range(1, m):
        c, s = trig_2pi(j * r, m)
        zd = _zero_derivs(r / m)
        a_terms.append(-math.pi / 2 * s * (-zd.d0 * bracket + 2 * big_l * zd.d1 - zd.d2))
        half.append(c * (bracket * zd.d1 - big_l * zd.d2 + zd.d3 / 3))
        err += zd.err_estimate * (1 + big_l)
    terms = half + a_terms
    err += 8 * EPS * math.fsum(abs(t) for t in terms)
    return StieltjesValue(2, j / m, 2 * math.fsum(terms), Method.CLOSED_FORM, 2 * err)


def residue_sum(k: int, q: int) -> float:
    """sum_{r=1}^q gamma_k(r/q) for k = 1, 2."""
    if q < 1:
        raise DomainError("q must be positive")
    g = euler_gamma()
    lq = math.log(q)
    if k == 1:
        return math.fsum([-q / 2 * lq * lq, -q * g * lq, q * stieltjes_constant(1)])
    if k == 2:
        return math.fsum([q / 3 * lq**3, q * g * lq * lq,
                          -2 * q * stieltjes_constant(1) * lq, q * stieltjes_constant(2)])
    raise RangeError("residue_sum supports k = 1 or 2")


def gamma2_fourier(ell: int, m: int, kind: str) -> float:
    """(1/2) sum_{j=1}^{m-1} gamma_2(j/m) trig(2 pi j ell / m) in closed form."""
    if m < 2 or not 1 <= ell <= m - 1:
        raise DomainError(f"need 1 <= ell <= m-1, got ell={ell}, m={m}")
    g = euler_gamma()
    big_l = g + math.log(2 * math.pi * m)
    bracket = ZETA2 + big_l * big_l
    lo = _zero_derivs(ell / m)
    hi = _zero_derivs(1 - ell / m)
    pi2 = math.pi**2
    if kind == "sine":
        inner = math.fsum([
            bracket * (hi.d0 - lo.d0),
            2 * big_l * (lo.d1 - hi.d1),
            hi.d2 - lo.d2,
        ])
        return math.fsum([math.pi**3 / 48 * (2 * ell - m), -math.pi * m / 4 * inner])
    if kind == "cosine":
        g1 = stieltjes_constant(1)
        g2 = stieltjes_constant(2)
        lm = math.log(m)
        terms = [-g2 / 2, g1 * lm, -g / 8 * pi2, -pi2 / 8 * lm, -g / 2 * lm * lm, -lm**3 / 6,
                 pi2 / 8 * (m * math.log(2 * math.sin(math.pi * ell / m)) + g)]
        for r in range(1, m):
            zd = _zero_derivs(r / m)
            terms.append(-(bracket * zd.d1 - big_l * zd.d2 + zd.d3 / 3))
        terms.append(m / 2 * (bracket * (lo.d1 + hi.d1) - big_l * (lo.d2 + hi.d2)
                              + (lo.d3 + hi.d3) / 3))
        return math.fsum(terms)
    raise DomainError(f"kind must be 'sine' or 'cosine', got {kind!r}")


def zeta_deriv_zero_sums(m: int, order: int) -> float:
    """Closed form of sum_{l=1}^{m-1} zeta^(order)(0, l/m)."""
    if m < 2:
        raise DomainError("m must be at least 2")
    lm = math.log(m)
    if order == 1:
        return -lm / 2
    if order == 2:
        return -lm * lm / 2 - lm * LN_2PI
    if order == 3:
        g = euler_gamma()
        inner = g * g / 2 - math.pi**2 / 24 - LN_2PI**2 / 2 + stieltjes_constant(1)
        return math.fsum([-lm**3 / 2, -1.5 * lm * lm * LN_2PI, 3 * lm * inner])
    raise RangeError("order must be 1, 2 or 3")


@dataclass(frozen=True)
class MultiplicationQuery:
    stretch: float
    z: float
    terms: int = DEFAULT_POLICY.series_max_terms
    term_floor: float = DEFAULT_POLICY.series_term_floor

    def __post_init__(self):
        if not 0 < self.stretch < 2:
            raise DomainError(f"stretch must lie in (0, 2), got {self.stretch!r}")
        if not self.z > 0:
            raise DomainError(f"z must be positive, got {self.z!r}")
        if self.terms < 1:
            raise DomainError("terms must be positive")


@dataclass(frozen=True)
class SeriesSum:
    value: float
    terms_used: int
    err_estimate: float

    def __float__(self) -> float:
        return self.value


def _sum_series(first: float, term, q: MultiplicationQuery) -> SeriesSum:
    """Accumulate first + sum_{n>=1} term(n) until two successive terms fall
    under the floor or ``q.terms`` is reached."""
    parts = [first]
    quiet = 0
    prev = last = 0.0
    n = 0
    while n < q.terms:
        n += 1
        prev, last = last, term(n)
        parts.append(last)
        quiet = quiet + 1 if abs(last) < q.term_floor else 0
        if quiet >= 2:
            break
    if quiet >= 2:
        err = abs(last)
    else:
        # geometric tail bound from the ratio of the last two terms
        rho = abs(last / prev) if prev else 1.0
        err = abs(last) * rho / (1 - rho) if rho < 1 else math.inf
    return SeriesSum(math.fsum(parts), n, err)


@lru_cache(maxsize=8192)
def _zeta_at_integer(n: int, z: float) -> tuple[float, float, float, float]:
    # zeta^(r)(n, z), r = 0..3, for n >= 2
    return tuple(hurwitz_derivs(float(n), z, 3)[0])


def multiplication_digamma(q: MultiplicationQuery) -> SeriesSum:
    """psi(kz) as the series sum_n (k-1)^n z^n psi^(n)(z) / n!."""
    k, z = q.stretch, q.z
    if k == 1:
        return SeriesSum(digamma(z), 0, 0.0)

    def term(n):
        # psi^(n)(z)/n! = (-1)^(n+1) zeta(n+1, z)
        return -((1 - k) * z) ** n * _zeta_at_integer(n + 1, z)[0]

    return _sum_series(digamma(z), term, q)


def multiplication_stieltjes(ell: int, q: MultiplicationQuery) -> SeriesSum:
    """gamma_1(kz) or gamma_2(kz) from data at z via the Truesdell series."""
    if ell not in (1, 2):
        raise RangeError("ell must be 1 or 2")
    k, z = q.stretch, q.z
    base = stieltjes_oracle(ell, z).value
    if k == 1:
        return SeriesSum(base, 0, 0.0)
    g = euler_gamma()
    psi_kz = multiplication_digamma(q).value
    psi_z = digamma(z)
    w = (1 - k) * z

    if ell == 1:
        def term(n):
            zeta0, zeta1 = _zeta_at_integer(n + 1, z)[:2]
            return -(w**n) * (zeta0 * digamma(n + 1.0) + zeta1)

        first = math.fsum([base, g * (psi_kz - psi_z)])
        return _sum_series(first, term, q)

    def term(n):
        zeta0, zeta1, zeta2 = _zeta_at_integer(n + 1, z)[:3]
        psi_n = digamma(n + 1.0)
        tri_n = polygamma(1, n + 1.0)
        inner = math.fsum([
            (g + psi_n / 2) * psi_n * zeta0,
            tri_n / 2 * zeta0,
            (g + psi_n) * zeta1,
            zeta2 / 2,
        ])
        return 2 * w**n * inner

    first = math.fsum([base, (g * g - ZETA2) * (psi_z - psi_kz)])
    return _sum_series(first, term, q)


def multiplication_general(ell: int, q: MultiplicationQuery) -> SeriesSum:
    """gamma_ell(kz) for ell in 0..3 from the Stirling-number form."""
    if not 0 <= ell <= 3:
        raise RangeError("ell must be in 0..3")
    k, z = q.stretch, q.z
    base = stieltjes_oracle(ell, z).value
    if k == 1:
        return SeriesSum(base, 0, 0.0)
    w = (k - 1) * z
    sign = (-1) ** ell

    def term(n):
        j = n + 1
        zetas = _zeta_at_integer(j, z)
        inner = math.fsum(
            (-1) ** i * math.comb(ell, i) * math.factorial(i)
            * stirling_factorial_ratio(j, i + 1) * zetas[ell - i]
            for i in range(min(ell, j - 1) + 1)
        )
        # w^(j-1) / (j-1)! * s(j, i+1) == w^n * [s(j, i+1) / (j-1)!]
        return sign * w**n * inner

    return _sum_series(base, term, q)


def asymptotic_gamma_k(k: int, a: float) -> StieltjesValue:
    """Leading small-a form ln^k(a)/a + gamma_k."""
    if not 0 < a < 1:
        raise DomainError(f"asymptotic form needs 0 < a < 1, got {a!r}")
    if not 0 <= k <= MAX_STIELTJES_INDEX:
        raise RangeError(f"k must be in 0..{MAX_STIELTJES_INDEX}")
    lead = math.log(a) ** k / a
    return StieltjesValue(k, a, lead + stieltjes_constant(k), Method.ASYMPTOTIC,
                          abs(lead) * EPS)


def gamma_k_at(k: int, x) -> float:
    """gamma_k(x) for k in 0..2, routed through the closed forms when x is a
    Fraction and through the oracle otherwise.

    Rationals above one are reduced to (0, 1] first and shifted back up.
    """
    if not 0 <= k <= 2:
        raise RangeError("gamma_k_at supports k = 0, 1, 2")
    if not x > 0:
        raise DomainError(f"gamma_k(x) needs x > 0, got {x!r}")
    if k == 0:
        return -digamma(float(x))
    if not isinstance(x, Fraction):
        return stieltjes_oracle(k, float(x)).value
    n = math.ceil(x) - 1
    base = x - n
    if base == 1:
        v = stieltjes_constant(k)
    else:
        fn = gamma1_rational if k == 1 else gamma2_rational
        v = fn(base.numerator, base.denominator).value
    return stieltjes_shift(k, float(base), n, v) if n else v
