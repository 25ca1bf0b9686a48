"""Doubly-exponential quadrature for integrals of ln^k(-ln x) f(x) over (0, 1).

With u = -ln x the integral becomes the half-line integral of
f(e^-u) e^-u ln^k(u), and u = exp(v - exp(-v)) makes the integrand decay
doubly exponentially as v -> +/- infinity, so a plain trapezoid rule in v
converges geometrically in 1/step.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ._backend import kernels
from .errors import DomainError
from .policy import DEFAULT_POLICY, PrecisionPolicy


@dataclass(frozen=True)
class PowerSum:
    """sum_j c_j x^{e_j} with real exponents; evaluated stably near x = 1."""

    terms: tuple[tuple[float, float], ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "PowerSum":
        """Ascending-power coefficient list [c0, c1, ...]."""
        return cls(tuple((float(c), float(e)) for e, c in enumerate(coeffs) if c != 0))

    @property
    def at_one(self) -> float:
        return math.fsum(c for c, _ in self.terms)

    def at_one_is_zero(self) -> bool:
        return sum(Fraction(c) for c, _ in self.terms) == 0

    def lowest_exponent(self) -> float:
        return min(e for _, e in self.terms)

    def __call__(self, x: float) -> float:
        return math.fsum(c * x**e for c, e in self.terms)

    def arrays(self) -> tuple[array, array, float]:
        at_one = 0.0 if self.at_one_is_zero() else self.at_one
        return (array("d", (c for c, _ in self.terms)),
                array("d", (e for _, e in self.terms)), at_one)


@dataclass(frozen=True)
class LogLogIntegrand:
    """Descriptor of the rational factor f(x) = num(x) / den(x).

    Rejected at construction unless f is integrable against ln^k(-ln x):
    the denominator may not vanish on (0, 1) and may vanish at x = 1 only
    where the numerator does, and f may not blow up like x^{-1} or worse at 0.
    """

    num: PowerSum
    den: PowerSum
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.num.terms or not self.den.terms:
            raise DomainError("numerator and denominator must be non-empty")
        if self.num.lowest_exponent() - self.den.lowest_exponent() <= -1:
            raise DomainError("integrand is not integrable at x = 0")
        if self.den.at_one_is_zero() and not self.num.at_one_is_zero():
            raise DomainError("integrand has a pole at x = 1")
        grid = [i / 512 for i in range(1, 512)]
        vals = [self.den(x) for x in grid]
        if any(v == 0 for v in vals) or min(vals) * max(vals) < 0:
            raise DomainError("denominator vanishes inside (0, 1)")

    @classmethod
    def rational(cls, num_coeffs, den_coeffs, label: str = "") -> "LogLogIntegrand":
        return cls(PowerSum.from_coeffs(num_coeffs), PowerSum.from_coeffs(den_coeffs), label)

    def __call__(self, x: float) -> float:
        return self.num(x) / self.den(x)


@lru_cache(maxsize=16)
def de_nodes(step: float, halfwidth: float) -> tuple[array, array, array]:
    """Nodes u_i, exact ln u_i, and weights step * du/dv for the map
    u = exp(v - exp(-v))."""
    n = int(math.ceil(halfwidth / step))
    u, logu, w = array("d"), array("d"), array("d")
    for i in range(-n, n + 1):
        v = i * step
        ev = math.exp(-v)
        lu = v - ev
        ui = math.exp(lu)
        if ui == 0.0:
            continue
        u.append(ui)
        logu.append(lu)
        w.append(step * ui * (1.0 + ev))
    return u, logu, w


def loglog_quadrature(integrand: LogLogIntegrand, k: int,
                      policy: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """Integral over (0, 1) of integrand(x) * ln^k(-ln x)."""
    if k < 0:
        raise DomainError("log power must be non-negative")
    u, logu, w = de_nodes(policy.quad_step, policy.quad_halfwidth)
    nc, ne, n1 = integrand.num.arrays()
    dc, de, d1 = integrand.den.arrays()
    return kernels.loglog_trapezoid(u, logu, w, nc, ne, n1, dc, de, d1, k)
