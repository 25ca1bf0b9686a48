"""Real-argument special functions: ln Gamma, digamma/polygamma, Riemann zeta derivatives."""

from __future__ import annotations

import math

from .combinatorics import bernoulli_number
from .errors import DomainError, PoleError, RangeError
from .hurwitz import euler_gamma, hurwitz_derivs, hurwitz_zeta, stieltjes_constant

LN_2PI = math.log(2 * math.pi)
_RAISE_TO = 10.0
_STIRLING_TERMS = 12
MAX_POLYGAMMA_ORDER = 6

_LGAMMA_COEFS = tuple(
    float(bernoulli_number(2 * k)) / (2 * k * (2 * k - 1)) for k in range(1, _STIRLING_TERMS + 1)
)
_DIGAMMA_COEFS = tuple(
    float(bernoulli_number(2 * k)) / (2 * k) for k in range(1, _STIRLING_TERMS + 1)
)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0 via the Stirling series after raising x above 10."""
    if not x > 0:
        raise DomainError(f"log_gamma needs x > 0, got {x!r}")
    shift = []
    y = x
    while y < _RAISE_TO:
        shift.append(-math.log(y))
        y += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    series = 0.0
    p = inv
    for c in _LGAMMA_COEFS:
        series += c * p
        p *= inv2
    return math.fsum([(y - 0.5) * math.log(y), -y, 0.5 * LN_2PI, series] + shift)


def digamma(x: float) -> float:
    if not x > 0:
        raise DomainError(f"digamma needs x > 0, got {x!r}")
    shift = []
    y = x
    while y < _RAISE_TO:
        shift.append(-1.0 / y)
        y += 1.0
    inv2 = 1.0 / (y * y)
    series = 0.0
    p = inv2
    for c in _DIGAMMA_COEFS:
        series -= c * p
        p *= inv2
    return math.fsum([math.log(y), -0.5 / y, series] + shift)


def polygamma(order: int, x: float) -> float:
    """psi^(order)(x); orders >= 1 go through (-1)^(n+1) n! zeta(n+1, x)."""
    if not 0 <= order <= MAX_POLYGAMMA_ORDER:
        raise RangeError(f"polygamma order must be in 0..{MAX_POLYGAMMA_ORDER}")
    if not x > 0:
        raise DomainError(f"polygamma needs x > 0, got {x!r}")
    if order == 0:
        return digamma(x)
    return (-1) ** (order + 1) * math.factorial(order) * hurwitz_zeta(order + 1.0, x)


def _sin_half_pi_derivs(s: float, max_order: int) -> list[float]:
    """d^i/ds^i sin(pi s/2), exact zeros/ones when s is an integer."""
    scale = math.pi / 2
    out = []
    if float(s).is_integer():
        table = (0.0, 1.0, 0.0, -1.0)
        for i in range(max_order + 1):
            out.append(scale**i * table[(int(s) + i) % 4])
    else:
        for i in range(max_order + 1):
            out.append(scale**i * math.sin(scale * s + i * scale))
    return out


def _leibniz(f: list[float], g: list[float]) -> list[float]:
    n = len(f)
    return [
        math.fsum(math.comb(r, i) * f[i] * g[r - i] for i in range(r + 1))
        for r in range(n)
    ]


def _zeta_at_zero(order: int) -> float:
    g = euler_gamma()
    g1 = stieltjes_constant(1)
    if order == 0:
        return -0.5
    if order == 1:
        return -0.5 * LN_2PI
    if order == 2:
        return math.fsum([g1, g * g / 2, -math.pi**2 / 24, -LN_2PI**2 / 2])
    g2 = stieltjes_constant(2)
    zeta3 = hurwitz_zeta(3.0, 1.0)
    return math.fsum([
        g**3, 1.5 * g * g * LN_2PI, -math.pi**2 / 8 * LN_2PI, -0.5 * LN_2PI**3,
        3 * (g + LN_2PI) * g1, 1.5 * g2, -zeta3,
    ])


def _zeta_functional(s: float, max_order: int) -> list[float]:
    """Derivatives of 2(2pi)^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s) for s < 0."""
    f1 = [2 * (2 * math.pi) ** (s - 1) * LN_2PI**i for i in range(max_order + 1)]
    f2 = _sin_half_pi_derivs(s, max_order)
    x = 1.0 - s
    gam = math.exp(log_gamma(x))
    psi = [polygamma(i, x) for i in range(3)]
    # d^i/dx^i Gamma(x) / Gamma(x), then chain rule d/ds = -d/dx
    ratios = [
        1.0,
        psi[0],
        psi[0] ** 2 + psi[1],
        psi[0] ** 3 + 3 * psi[0] * psi[1] + psi[2],
    ]
    f3 = [(-1) ** i * gam * ratios[i] for i in range(max_order + 1)]
    zvals, _ = hurwitz_derivs(x, 1.0, max_order)
    f4 = [(-1) ** i * zvals[i] for i in range(max_order + 1)]
    return _leibniz(_leibniz(f1, f2), _leibniz(f3, f4))


def riemann_zeta_deriv(order: int, s: float) -> float:
    """zeta^(order)(s) for real s != 1 and order in 0..3."""
    if not 0 <= order <= 3:
        raise RangeError("order must be in 0..3")
    if s == 1:
        raise PoleError("zeta(s) has a pole at s = 1")
    if s == 0:
        return _zeta_at_zero(order)
    if s > 0:
        return hurwitz_derivs(s, 1.0, order)[0][order]
    if float(s).is_integer() and int(s) % 2 == 0 and order <= 1:
        m = -int(s) // 2
        if order == 0:
            return 0.0
        return ((-1) ** m * math.factorial(2 * m) * hurwitz_zeta(2 * m + 1.0, 1.0)
                / (2 * (2 * math.pi) ** (2 * m)))
    return _zeta_functional(s, order)[order]


def trig_2pi(n: int, m: int) -> tuple[float, float]:
    """(cos, sin) of 2 pi n / m, reducing n mod m first."""
    r = n % m
    theta = 2 * math.pi * r / m
    return math.cos(theta), math.sin(theta)


def digamma_rational_gauss(j: int, m: int) -> float:
    """psi(j/m) from Gauss' finite cosine sum over ln Gamma(r/m)."""
    if not (0 < j < m):
        raise DomainError(f"need 0 < j < m, got j={j}, m={m}")
    terms = [-euler_gamma(), -math.log(2 * math.pi * m),
             -math.pi / 2 / math.tan(math.pi * j / m)]
    for r in range(1, m):
        terms.append(-2 * trig_2pi(j * r, m)[0] * log_gamma(r / m))
    return math.fsum(terms)


def zero_power_sums(r: int) -> float:
    """Sum over nontrivial zeta zeros rho of rho^(-r), for r = 2 or 3."""
    g = euler_gamma()
    g1 = stieltjes_constant(1)
    if r == 2:
        return math.fsum([1.0, -math.pi**2 / 8, 2 * g1, g * g])
    if r == 3:
        g2 = stieltjes_constant(2)
        zeta3 = hurwitz_zeta(3.0, 1.0)
        return math.fsum([1.0, -7 / 8 * zeta3, g**3, 3 * g * g1, 1.5 * g2])
    raise RangeError("zero_power_sums supports r = 2 or 3")


def zeta_deriv_functional(order: int, s: float) -> float:
    """zeta^(order)(s) for s < 0, always through the functional equation."""
    if not 0 <= order <= 3:
        raise RangeError("order must be in 0..3")
    if not s < 0:
        raise DomainError("functional-equation route needs s < 0")
    return _zeta_functional(s, order)[order]
