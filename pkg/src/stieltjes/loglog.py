"""Log-log integrals over (0, 1) with rational factors.

Two independent closed-form routes are provided for most families: partial
fractions over roots of unity combined with the s-derivatives of Li_s at
s = 1, and differences of Stieltjes constants.  ``loglog_quadrature`` is the
third, purely numerical, route.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .closed_forms import gamma_k_at
from .combinatorics import generalized_harmonic, stirling_first
from .errors import BranchCutError, DomainError, PoleError, RangeError
from .hurwitz import euler_gamma, hurwitz_zeta, stieltjes_constant, stieltjes_oracle
from .policy import DEFAULT_POLICY, PrecisionPolicy
from .quadrature import LogLogIntegrand, PowerSum, loglog_quadrature
from .specialfn import digamma, log_gamma, riemann_zeta_deriv, zeta_deriv_functional

ZETA_TABLE_SIZE = 80
IMAG_TOL = 1e-10
OMEGA_PI_WINDOW = 1e-8
TWO_PI = 2 * math.pi


class Route(str, enum.Enum):
    ROOTS = "closed_form_roots"
    STIELTJES = "closed_form_stieltjes"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class IntegralResult:
    value: float
    route: Route
    imag_residual: float = 0.0

    def __float__(self) -> float:
        return self.value


def principal_log(z: complex) -> complex:
    """Complex log with imaginary part in (-pi, pi]."""
    w = cmath.log(z)
    if w.imag == -math.pi:
        w = complex(w.real, math.pi)
    return w


def root_of_unity(n: int, q: int) -> complex:
    """exp(2 pi i n / q) built from the reduced residue, exact on the axes."""
    r = n % q
    if r == 0:
        return complex(1.0, 0.0)
    if 2 * r == q:
        return complex(-1.0, 0.0)
    if 4 * r == q:
        return complex(0.0, 1.0)
    if 4 * r == 3 * q:
        return complex(0.0, -1.0)
    theta = TWO_PI * r / q
    if theta > math.pi:
        theta -= TWO_PI
    return complex(math.cos(theta), math.sin(theta))


@lru_cache(maxsize=None)
def zeta_deriv_table(order: int) -> tuple[float, ...]:
    """zeta^(order)(1-n) for n = 1..ZETA_TABLE_SIZE; index 0 holds n = 1."""
    if order not in (1, 2):
        raise RangeError("table holds first and second derivatives only")
    return tuple(riemann_zeta_deriv(order, 1.0 - n) for n in range(1, ZETA_TABLE_SIZE + 1))


def _log_series(coeffs: tuple[float, ...], ell: complex, floor: float) -> complex:
    # sum_{n>=1} coeffs[n-1] ell^n / n!
    acc = []
    p = complex(1.0, 0.0)
    quiet = 0
    for n, c in enumerate(coeffs, start=1):
        p = p * ell / n
        t = c * p
        acc.append(t)
        quiet = quiet + 1 if abs(t) < floor else 0
        if quiet >= 2:
            break
    return complex(math.fsum(t.real for t in acc), math.fsum(t.imag for t in acc))


def _polylog_logs(z: complex) -> tuple[complex, complex]:
    if z == 1:
        raise PoleError("Li_s(z) derivatives are singular at z = 1")
    if z == 0:
        raise DomainError("z = 0 is outside the logarithmic expansion")
    ell = principal_log(z)
    if abs(ell) >= TWO_PI:
        raise DomainError("expansion requires |ln z| < 2 pi")
    return ell, principal_log(-ell)


def polylog_sderiv_at1(order: int, z: complex,
                       policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """d^order/ds^order Li_s(z) at s = 1, for order 1 or 2."""
    ell, w = _polylog_logs(complex(z))
    g = euler_gamma()
    pi2 = math.pi**2
    if order == 1:
        head = -stieltjes_constant(1) - g * g / 2 - pi2 / 12 - g * w - w * w / 2
    elif order == 2:
        zeta3 = hurwitz_zeta(3.0, 1.0)
        head = (-2 * g**3 - g * pi2 - 6 * g * g * w - pi2 * w - 6 * g * w * w
                - 2 * w**3 - 4 * zeta3) / 6 + stieltjes_constant(2)
    else:
        raise RangeError("order must be 1 or 2")
    return head + _log_series(zeta_deriv_table(order), ell, policy.series_term_floor)


def pole_lead_log(a: complex) -> complex:
    """Principal ln((a - 1)/a), the logarithmic part of each partial fraction."""
    return principal_log((a - 1) / a)


def _finish(total: complex, route: Route) -> IntegralResult:
    resid = abs(total.imag)
    if resid > IMAG_TOL:
        raise BranchCutError(f"imaginary residue {resid:.3e} exceeds {IMAG_TOL:g}")
    return IntegralResult(total.real, route, resid)


def root_weight_sum(p: int, q: int) -> complex:
    """sum_{r=1}^{q-1} (omega_r^p - 1); equals -q."""
    return sum((root_of_unity(r * p, q) - 1 for r in range(1, q)), complex(0.0))


def integrand_I_pq(p: int, q: int) -> LogLogIntegrand:
    num = [0] * q
    num[q - 1] += q
    num[p - 1] -= q
    den = [1] + [0] * (q - 1) + [-1]
    return LogLogIntegrand.rational(num, den, f"I_pq(p={p},q={q})")


def _check_pq(k: int, p: int, q: int) -> None:
    if k not in (1, 2):
        raise RangeError("log power k must be 1 or 2")
    if not 0 < p < q:
        raise DomainError(f"need 0 < p < q, got p={p}, q={q}")


def integral_I_pq(k: int, p: int, q: int, route: Route | str = Route.STIELTJES,
                  policy: PrecisionPolicy = DEFAULT_POLICY) -> IntegralResult:
    """q * integral (x^{q-1} - x^{p-1}) / (1 - x^q) ln^k(-ln x) dx over (0, 1)."""
    _check_pq(k, p, q)
    route = Route(route) if not isinstance(route, Route) else route
    g = euler_gamma()
    if route is Route.QUADRATURE:
        return IntegralResult(loglog_quadrature(integrand_I_pq(p, q), k, policy), route)

    if route is Route.ROOTS:
        parts = []
        for r in range(1, q):
            om = root_of_unity(r, q)
            om_inv = root_of_unity(-r, q)
            weight = root_of_unity(r * p, q) - 1
            lead = pole_lead_log(om)
            d1 = polylog_sderiv_at1(1, om_inv, policy)
            if k == 1:
                parts.append(-weight * (g * lead + d1))
            else:
                d2 = polylog_sderiv_at1(2, om_inv, policy)
                parts.append(weight * ((g * g + math.pi**2 / 6) * lead + 2 * g * d1 - d2))
        total = complex(math.fsum(t.real for t in parts), math.fsum(t.imag for t in parts))
        return _finish(total, route)

    lq = math.log(q)
    psi_term = g + digamma(p / q)
    g1_diff = gamma_k_at(1, Fraction(p, q)) - stieltjes_constant(1)
    if k == 1:
        value = math.fsum([-(g + lq) * psi_term, g1_diff])
    else:
        g2_diff = stieltjes_constant(2) - gamma_k_at(2, Fraction(p, q))
        value = math.fsum([
            (g * g + math.pi**2 / 6 + 2 * g * lq + lq * lq) * psi_term,
            -2 * (g + lq) * g1_diff,
            g2_diff,
        ])
    return IntegralResult(value, route)


def _as_exact(x: float | int | Fraction) -> Fraction | float:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or float(x).is_integer():
        return Fraction(int(x))
    return float(x)


def _frac(num, den):
    if isinstance(num, Fraction) and isinstance(den, Fraction):
        return num / den
    return float(num) / float(den)


def integrand_family_I(n: int, qexp: float, sign: str) -> LogLogIntegrand:
    if sign == "plus":
        den = [1] * n
    elif sign == "minus":
        den = [(-1) ** i for i in range(n)]
    else:
        raise DomainError("sign must be 'plus' or 'minus'")
    return LogLogIntegrand(PowerSum(((1.0, float(qexp)),)), PowerSum.from_coeffs(den),
                           f"I_{sign}(n={n},q={qexp})")


def integral_family_I(n: int, qexp: float = 0, sign: str = "plus") -> float:
    """Integral of x^q ln(-ln x) / (1 +/- x + ... + x^{n-1}) over (0, 1).

    For ``sign='minus'`` (n odd) the denominator alternates in sign and the
    logarithmic prefactor involves ln(2n), since the series runs over the
    residues of 2n.
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    if not qexp > -1:
        raise DomainError("exponent q must exceed -1")
    g = euler_gamma()
    q = _as_exact(qexp)
    if sign == "plus":
        lo, hi = _frac(q + 1, Fraction(n)), _frac(q + 2, Fraction(n))
        return math.fsum([
            (g + math.log(n)) / n * (digamma(float(lo)) - digamma(float(hi))),
            (gamma_k_at(1, hi) - gamma_k_at(1, lo)) / n,
        ])
    if sign == "minus":
        if n % 2 == 0:
            raise DomainError("the alternating family needs odd n")
        two_n = Fraction(2 * n)
        a1, a2 = _frac(q + 1, two_n), _frac(q + 2, two_n)
        b1, b2 = _frac(q + n + 1, two_n), _frac(q + n + 2, two_n)
        psi = (digamma(float(a2)) + digamma(float(a1))
               - digamma(float(b2)) - digamma(float(b1)))
        g1 = (gamma_k_at(1, b2) + gamma_k_at(1, b1)
              - gamma_k_at(1, a2) - gamma_k_at(1, a1))
        return math.fsum([(g + math.log(2 * n)) / (2 * n) * psi, g1 / (2 * n)])
    raise DomainError("sign must be 'plus' or 'minus'")


def integrand_family_J(p: float, qexp: float = 0) -> LogLogIntegrand:
    return LogLogIntegrand(PowerSum(((1.0, float(qexp)),)),
                           PowerSum(((1.0, 0.0), (1.0, float(p)))), f"J(p={p},q={qexp})")


def integral_family_J(p: float, qexp: float = 0, power: int = 1) -> float:
    """Integral of x^q ln^power(-ln x) / (1 + x^p) over (0, 1)."""
    if not p > 0:
        raise DomainError("p must be positive")
    if not qexp > -1:
        raise DomainError("exponent q must exceed -1")
    g = euler_gamma()
    pe, q = _as_exact(p), _as_exact(qexp)
    two_p = 2 * pe
    lo = _frac(q + 1, two_p)
    hi = _frac(pe + q + 1, two_p)
    l2p = math.log(2 * float(p))
    inv = 1 / (2 * float(p))
    if power == 1:
        return math.fsum([
            (g + l2p) * inv * (digamma(float(lo)) - digamma(float(hi))),
            inv * (gamma_k_at(1, hi) - gamma_k_at(1, lo)),
        ])
    if power == 2:
        if q != 0:
            raise DomainError("the squared-log family is available for q = 0 only")
        return math.fsum([
            inv * (g * g + math.pi**2 / 6 + 2 * g * l2p + l2p * l2p)
            * (digamma(float(hi)) - digamma(float(lo))),
            2 * inv * (g + l2p) * (gamma_k_at(1, lo) - gamma_k_at(1, hi)),
            inv * (gamma_k_at(2, lo) - gamma_k_at(2, hi)),
        ])
    raise RangeError("power must be 1 or 2")


def integrand_I_omega(delta: float) -> LogLogIntegrand:
    return LogLogIntegrand.rational([1], [1, -2 * math.cos(delta), 1], f"I_omega({delta})")


def integral_I_omega(delta: float) -> float:
    """Integral of ln(-ln x) / (x^2 - 2x cos(delta) + 1) over (0, 1)."""
    if not -math.pi < delta <= math.pi:
        raise DomainError("delta must lie in (-pi, pi]")
    # the integrand depends on cos(delta) only
    delta = abs(delta)
    if math.pi - delta < OMEGA_PI_WINDOW:
        # bracket and sin(delta) vanish together at pi; this is the limit
        return 0.5 * (math.log(math.pi / 2) - euler_gamma())
    s = math.sin(delta)
    if abs(s) < 1e-6:
        raise PoleError("I_omega is singular at delta = 0")
    t = delta / TWO_PI
    bracket = math.fsum([
        delta / math.pi * math.log(TWO_PI),
        -math.log(abs(delta)),
        log_gamma(1 + t) - log_gamma(1 - t),
    ])
    return -math.pi / (2 * s) * bracket


def _check_pole_point(a: complex) -> None:
    if a == 1:
        raise PoleError("pole integral is singular at a = 1")
    on_circle = abs(abs(a) - 1.0) < 1e-12
    if not (on_circle or a.real > 1):
        raise DomainError("need |a| = 1 (a != 1) or Re a > 1")


def _log_derivs(w: complex, m: int) -> tuple[list[complex], list[complex]]:
    """d^j/dw^j of ln(w) and ln^2(w) for j = 0..m."""
    lw = principal_log(w)
    d1, d2 = [lw], [lw * lw]
    for j in range(1, m + 1):
        c = (-1) ** (j - 1) * math.factorial(j - 1) / w**j
        d1.append(c)
        d2.append(2 * c * (lw - float(generalized_harmonic(j - 1))))
    return d1, d2


def _polylog_d1_lderivs(ell: complex, m: int, floor: float) -> list[complex]:
    """d^j/dL^j of the order-1 Li_s derivative at s = 1 as a function of L = ln z."""
    g = euler_gamma()
    w = -ell
    d1, d2 = _log_derivs(w, m)
    table = zeta_deriv_table(1)
    out = []
    for j in range(m + 1):
        # d/dL = -d/dw on the ln(-L) pieces
        sgn = (-1) ** j
        head = sgn * (-g * d1[j] - d2[j] / 2)
        if j == 0:
            head += -stieltjes_constant(1) - g * g / 2 - math.pi**2 / 12
        # j-fold derivative of sum c_n L^n / n! keeps c_j as its constant term
        const = table[j - 1] if j else 0.0
        out.append(head + const + _log_series(table[j:], ell, floor))
    return out


def integral_pole(a: complex, k: int = 1, order: int = 0,
                  policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """Integral of ln^k(-ln x) / (x - a)^{order+1} over (0, 1)."""
    a = complex(a)
    _check_pole_point(a)
    if k not in (1, 2):
        raise RangeError("log power k must be 1 or 2")
    if order < 0:
        raise RangeError("order must be non-negative")
    g = euler_gamma()
    z = 1 / a
    if order == 0:
        lead = pole_lead_log(a)
        d1 = polylog_sderiv_at1(1, z, policy)
        if k == 1:
            return -g * lead - d1
        d2 = polylog_sderiv_at1(2, z, policy)
        return (g * g + math.pi**2 / 6) * lead + 2 * g * d1 - d2
    if k != 1:
        raise RangeError("higher-order poles are available for k = 1 only")
    m = order
    ell, _ = _polylog_logs(z)
    lderivs = _polylog_d1_lderivs(ell, m, policy.series_term_floor)
    # L = -ln a (+ const): d^m/da^m F(L) = a^{-m} sum_j s(m, j) (-1)^j F^(j)(L)
    da = sum(stirling_first(m, j) * (-1) ** j * lderivs[j] for j in range(1, m + 1)) / a**m
    head = g / m * (-1) ** m * (1 / (a - 1) ** m - 1 / a**m)
    return head - da / math.factorial(m)


def integral_pole_double(a: complex,
                         policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """Integral of ln(-ln x) / (x - a)^2 over (0, 1) from the explicit
    zeta'(-n) series, n >= 0."""
    a = complex(a)
    _check_pole_point(a)
    g = euler_gamma()
    ell, w = _polylog_logs(1 / a)
    # ln a taken as -Log(1/a); differs from Log(a) only at a = -1
    la = -ell
    # zeta'(-n) = table[n]; the n = 0 term is zeta'(0)
    series = riemann_zeta_deriv(1, 0.0) + _log_series(zeta_deriv_table(1)[1:], ell,
                                                      policy.series_term_floor)
    bracket = g * (1 / la - 1 / (a - 1)) + w / la + series
    return bracket / a


def integrand_pole_real(a: float, order: int = 0) -> LogLogIntegrand:
    """1 / (x - a)^{order+1} for real a > 1."""
    coeffs = [1.0]
    for _ in range(order + 1):
        coeffs = [(coeffs[i - 1] if i > 0 else 0.0) - a * (coeffs[i] if i < len(coeffs) else 0.0)
                  for i in range(len(coeffs) + 1)]
    sign = 1.0 if coeffs[-1] > 0 else -1.0
    return LogLogIntegrand.rational([sign], [sign * c for c in coeffs], f"pole(a={a},m={order})")


def lngamma_series(x: float, floor: float = 1e-17) -> float:
    """sum_{n>=1} x^{2n+1} zeta(2n+1) / (2n+1), |x| < 1."""
    if not abs(x) < 1:
        raise DomainError("series needs |x| < 1")
    parts = []
    n = 1
    while True:
        t = x ** (2 * n + 1) * hurwitz_zeta(2 * n + 1.0, 1.0) / (2 * n + 1)
        parts.append(t)
        if abs(t) < floor or n > 2000:
            break
        n += 1
    return math.fsum(parts)


def lngamma_series_closed(x: float) -> float:
    return -euler_gamma() * x + 0.5 * (log_gamma(1 - x) - log_gamma(1 + x))


@dataclass(frozen=True)
class I2Breakdown:
    value: float
    partial_fractions: float
    zeta_prime_series: float
    odd_zeta_series: float
    closed_forms: tuple[float, float, float]
    conversion_max_dev: float
    lngamma_series_dev: float
    imag_residual: float


def demonstration1_I2(policy: PrecisionPolicy = DEFAULT_POLICY) -> I2Breakdown:
    """Integral of ln(-ln x) / (1 + x^2) over (0, 1) by partial fractions over x = +/- i."""
    g = euler_gamma()
    i = complex(0.0, 1.0)
    pf = (integral_pole(i, 1, 0, policy) - integral_pole(-i, 1, 0, policy)) / (2 * i)

    # sum over m >= 0 of (-1)^m zeta'(-2m) (pi/2)^{2m+1} / (2m+1)!
    table = zeta_deriv_table(1)
    parts = [math.pi * (g / 4 + 0.5 * math.log(math.pi / 2))]
    for m in range(0, (len(table) - 1) // 2):
        t = (-1) ** m * table[2 * m] * (math.pi / 2) ** (2 * m + 1) / math.factorial(2 * m + 1)
        parts.append(t)
        if m > 2 and abs(t) < policy.series_term_floor:
            break
    zp_series = math.fsum(parts)

    conv = 0.0
    for m in range(1, 16):
        lhs = 2 * (-1) ** m * zeta_deriv_functional(1, -2.0 * m)
        rhs = math.factorial(2 * m) * hurwitz_zeta(2 * m + 1.0, 1.0) / TWO_PI ** (2 * m)
        conv = max(conv, abs(lhs - rhs) / abs(rhs))

    odd = 4 * lngamma_series(0.25)
    odd_series = math.pi / 4 * math.fsum([g, math.log(math.pi / 8), odd])
    lng_dev = max(abs(lngamma_series(x) - lngamma_series_closed(x)) for x in (0.25, 1 / 3))

    lg14, lg34, lg54 = log_gamma(0.25), log_gamma(0.75), log_gamma(1.25)
    form_a = math.pi / 4 * (math.log(8 * math.pi) + 2 * lg34 - 2 * lg14 - math.log(4))
    form_b = math.pi / 2 * (0.5 * math.log(TWO_PI) + lg34 - lg14)
    form_c = math.pi / 4 * (math.log(math.pi / 8) + 2 * (lg34 - lg54))
    return I2Breakdown(
        value=pf.real,
        partial_fractions=pf.real,
        zeta_prime_series=zp_series,
        odd_zeta_series=odd_series,
        closed_forms=(form_a, form_b, form_c),
        conversion_max_dev=conv,
        lngamma_series_dev=lng_dev,
        imag_residual=abs(pf.imag),
    )


def hyp3f3_unit(x: float, floor: float = 1e-18) -> float:
    """3F3(1,1,1; 2,2,2; x) by its entire power series."""
    term = 1.0
    parts = [term]
    j = 0
    while True:
        # t_{j+1}/t_j = x (j+1)^3 / ((j+2)^3 (j+1))
        term *= x * (j + 1) ** 2 / (j + 2) ** 3
        j += 1
        parts.append(term)
        if abs(term) < floor * max(1.0, abs(math.fsum(parts))) and j > abs(x):
            break
    return math.fsum(parts)


def hyp3f3_and_zx_integral(z: float) -> float:
    """Closed form of the integral of z^x ln(x) / x over (1, infinity), 0 < z < 1."""
    if not 0 < z < 1:
        raise DomainError("z must lie in (0, 1)")
    g = euler_gamma()
    lz = math.log(z)
    w = math.log(-lz)
    return math.fsum([g * g / 2, math.pi**2 / 12, lz * hyp3f3_unit(lz), g * w, w * w / 2])
