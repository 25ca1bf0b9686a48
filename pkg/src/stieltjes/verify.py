"""Registry of identity checks run by ``stieltjes verify``.

Each check compares two independent evaluations over a parameter grid and
reports the largest deviation against its tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .closed_forms import (
    MultiplicationQuery,
    asymptotic_gamma_k,
    gamma1_rational,
    gamma2_fourier,
    gamma2_rational,
    multiplication_digamma,
    multiplication_general,
    multiplication_stieltjes,
    residue_sum,
    zeta_deriv_zero_sums,
)
from .errors import DomainError
from .hurwitz import EulerMaclaurinPlan, hurwitz_derivs, stieltjes_constant, stieltjes_oracle
from .loglog import (
    Route,
    demonstration1_I2,
    hyp3f3_and_zx_integral,
    integral_family_I,
    integral_family_J,
    integral_I_omega,
    integral_I_pq,
    integral_pole,
    integral_pole_double,
    integrand_family_I,
    integrand_family_J,
    integrand_I_omega,
    integrand_pole_real,
    root_weight_sum,
)
from .policy import PRESETS, PrecisionPolicy, get_policy
from .quadrature import LogLogIntegrand, de_nodes, loglog_quadrature
from .specialfn import digamma, zero_power_sums

# high-precision literature values
PUBLISHED = {
    0: 0.57721566490153286061,
    1: -0.072815845483676724861,
    2: -0.0096903631928723184845,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_dev: float
    tol: float
    cases: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.max_dev <= self.tol


class _Tracker:
    def __init__(self, name: str, tol: float):
        self.name, self.tol = name, tol
        self.max_dev = 0.0
        self.cases = 0
        self.worst = ""

    def add(self, dev: float, label: str = "") -> None:
        self.cases += 1
        if not dev <= self.max_dev:  # NaN counts as worst
            self.max_dev = dev if dev == dev else math.inf
            self.worst = label

    def result(self) -> CheckResult:
        detail = f"worst at {self.worst}" if self.worst else ""
        return CheckResult(self.name, self.max_dev, self.tol, self.cases, detail)


def check_rational_gamma(m_max: int = 12, policy: PrecisionPolicy | None = None) -> list[CheckResult]:
    t1 = _Tracker("rational_gamma.gamma1", 1e-9)
    t2 = _Tracker("rational_gamma.gamma2", 1e-8)
    for m in range(2, m_max + 1):
        for j in range(1, m):
            a = j / m
            t1.add(abs(gamma1_rational(j, m).value - stieltjes_oracle(1, a).value), f"{j}/{m}")
            t2.add(abs(gamma2_rational(j, m).value - stieltjes_oracle(2, a).value), f"{j}/{m}")
    return [t1.result(), t2.result()]


def check_residue_sums(q_max: int = 10, policy: PrecisionPolicy | None = None) -> list[CheckResult]:
    t = _Tracker("residue_sums.closure", 1e-8)
    for k, fn in ((1, gamma1_rational), (2, gamma2_rational)):
        for q in range(1, q_max + 1):
            parts = [fn(r, q).value for r in range(1, q)] + [stieltjes_oracle(k, 1.0).value]
            t.add(abs(residue_sum(k, q) - math.fsum(parts)), f"k={k},q={q}")
    return [t.result()]


def check_fourier_sums(m_max: int = 8, policy: PrecisionPolicy | None = None) -> list[CheckResult]:
    tf = _Tracker("fourier_sums.fourier", 1e-8)
    for m in range(2, m_max + 1):
        g2 = [stieltjes_oracle(2, j / m).value for j in range(1, m)]
        for ell in range(1, m):
            for kind, trig in (("sine", math.sin), ("cosine", math.cos)):
                direct = 0.5 * math.fsum(
                    v * trig(2 * math.pi * ((j * ell) % m) / m) for j, v in enumerate(g2, start=1)
                )
                tf.add(abs(gamma2_fourier(ell, m, kind) - direct), f"{kind},l={ell},m={m}")
    tz = _Tracker("fourier_sums.zeta_sums", 1e-9)
    for m in range(2, max(m_max, 10) + 1):
        derivs = [hurwitz_derivs(0.0, ell / m, 3)[0] for ell in range(1, m)]
        for order in (1, 2, 3):
            direct = math.fsum(d[order] for d in derivs)
            tz.add(abs(zeta_deriv_zero_sums(m, order) - direct), f"order={order},m={m}")
    return [tf.result(), tz.result()]


STRETCHES = (0.25, 0.5, 1.5, 1.75)
Z_VALUES = (0.5, 1.0, 2.0)


def check_multiplication(policy: PrecisionPolicy | None = None, **_) -> list[CheckResult]:
    policy = policy or get_policy()
    tp = _Tracker("multiplication.digamma", 1e-9)
    ts = _Tracker("multiplication.stieltjes", 1e-8)
    tg = _Tracker("multiplication.general", 1e-10)
    for k in STRETCHES:
        for z in Z_VALUES:
            q = MultiplicationQuery(k, z, policy.series_max_terms, policy.series_term_floor)
            tp.add(abs(multiplication_digamma(q).value - digamma(k * z)), f"k={k},z={z}")
            for ell in (1, 2):
                s = multiplication_stieltjes(ell, q).value
                ts.add(abs(s - stieltjes_oracle(ell, k * z).value), f"l={ell},k={k},z={z}")
                tg.add(abs(multiplication_general(ell, q).value - s), f"l={ell},k={k},z={z}")
    return [tp.result(), ts.result(), tg.result()]


def check_rational_integrals(q_max: int = 8, policy: PrecisionPolicy | None = None) -> list[CheckResult]:
    policy = policy or get_policy()
    t = _Tracker("rational_integrals.routes", 1e-7)
    ti = _Tracker("rational_integrals.imag_residual", 1e-10)
    tw = _Tracker("rational_integrals.root_weights", 1e-12)
    for q in range(2, q_max + 1):
        for p in range(1, q):
            tw.add(abs(root_weight_sum(p, q) + q), f"p={p},q={q}")
            for k in (1, 2):
                r = integral_I_pq(k, p, q, Route.ROOTS, policy)
                s = integral_I_pq(k, p, q, Route.STIELTJES, policy).value
                n = integral_I_pq(k, p, q, Route.QUADRATURE, policy).value
                t.add(max(abs(r.value - s), abs(r.value - n), abs(s - n)), f"k={k},p={p},q={q}")
                ti.add(r.imag_residual, f"k={k},p={p},q={q}")
    return [t.result(), ti.result(), tw.result()]


def _family_cases():
    third = Fraction(1, 3)
    yield "I_plus", lambda: integral_family_I(3, 0, "plus"), LogLogIntegrand.rational([1], [1, 1, 1]), 1
    yield "I_minus", lambda: integral_family_I(3, 0, "minus"), LogLogIntegrand.rational([1], [1, -1, 1]), 1
    for n in (2, 4, 5):
        yield f"I_plus_{n}", lambda n=n: integral_family_I(n, 0, "plus"), integrand_family_I(n, 0, "plus"), 1
    for q in (Fraction(1, 2), third, 2):
        yield (f"I_plus_4^{q}", lambda q=q: integral_family_I(4, q, "plus"),
               integrand_family_I(4, float(q), "plus"), 1)
        yield (f"I_minus_5^{q}", lambda q=q: integral_family_I(5, q, "minus"),
               integrand_family_I(5, float(q), "minus"), 1)
    yield "I_minus_3^0", lambda: integral_family_I(3, 0, "minus"), integrand_family_I(3, 0, "minus"), 1
    for p in (1, 2, 5):
        yield f"J_{p}", lambda p=p: integral_family_J(p), integrand_family_J(p), 1
        yield f"J_{p}^2", lambda p=p: integral_family_J(p, 0, 2), integrand_family_J(p), 2
    for p in (2, 3):
        for q in (1, 2):
            yield (f"J_{p}^q={q}", lambda p=p, q=q: integral_family_J(p, q),
                   integrand_family_J(p, q), 1)
    for name, d in (("pi/4", math.pi / 4), ("pi/2", math.pi / 2),
                    ("2pi/3", 2 * math.pi / 3), ("pi", math.pi)):
        yield f"I_omega({name})", lambda d=d: integral_I_omega(d), integrand_I_omega(d), 1


def check_family_integrals(policy: PrecisionPolicy | None = None, **_) -> list[CheckResult]:
    policy = policy or get_policy()
    t = _Tracker("family_integrals.quadrature", 1e-7)
    for label, closed, integrand, k in _family_cases():
        t.add(abs(closed() - loglog_quadrature(integrand, k, policy)), label)
    return [t.result()]


LIMIT_P = 1000


def check_family_limits(policy: PrecisionPolicy | None = None, **_) -> list[CheckResult]:
    g = stieltjes_constant(0)
    t1 = _Tracker("family_limits.J", 1e-2)
    t1.add(abs(integral_family_J(LIMIT_P) + g), f"p={LIMIT_P}")
    t2 = _Tracker("family_limits.J2", 1e-2)
    t2.add(abs(integral_family_J(LIMIT_P, 0, 2) - (g * g + math.pi**2 / 6)), f"p={LIMIT_P}")
    return [t1.result(), t2.result()]


def check_i2(policy: PrecisionPolicy | None = None, **_) -> list[CheckResult]:
    policy = policy or get_policy()
    d = demonstration1_I2(policy)
    forms = d.closed_forms
    pair = max(abs(x - y) for x in forms for y in forms)
    quad = loglog_quadrature(LogLogIntegrand.rational([1], [1, 0, 1]), 1, policy)
    out = [
        CheckResult("i2.closed_forms_pairwise", pair, 1e-12, 3),
        CheckResult("i2.quadrature", max(abs(f - quad) for f in forms + (d.value,)), 1e-9, 4),
        CheckResult("i2.series_routes",
                    max(abs(d.zeta_prime_series - d.value), abs(d.odd_zeta_series - d.value)),
                    1e-12, 2),
        CheckResult("i2.zeta_conversion", d.conversion_max_dev, 1e-12, 15),
        CheckResult("i2.lngamma_series", d.lngamma_series_dev, 1e-12, 2),
        CheckResult("i2.imag_residual", d.imag_residual, 1e-10, 1),
    ]
    return out


def check_i_omega(policy: PrecisionPolicy | None = None, **_) -> list[CheckResult]:
    policy = policy or get_policy()
    t = _Tracker("i_omega.quadrature", 1e-7)
    for i in range(-11, 13):
        if i == 0:
            continue
        d = i * math.pi / 12
        t.add(abs(integral_I_omega(d) - loglog_quadrature(integrand_I_omega(d), 1, policy)),
              f"delta={i}pi/12")
    return [t.result()]


def check_pole_integrals(policy: PrecisionPolicy | None = None, **_) -> list[CheckResult]:
    policy = policy or get_policy()
    tq = _Tracker("pole.quadrature", 1e-7)
    for a in (1.5, 2.0, 5.0):
        for m in range(0, 4):
            tq.add(abs(integral_pole(a, 1, m, policy).real
                       - loglog_quadrature(integrand_pole_real(a, m), 1, policy)), f"a={a},m={m}")
        tq.add(abs(integral_pole(a, 2, 0, policy).real
                   - loglog_quadrature(integrand_pole_real(a, 0), 2, policy)), f"a={a},k=2")
    te = _Tracker("pole.double_series", 1e-12)
    for a in (2.0, 1.5, -1.0, 1j, -1j, complex(math.cos(1), math.sin(1)), 2 + 3j):
        te.add(abs(integral_pole_double(a, policy) - integral_pole(a, 1, 1, policy)), str(a))
    return [tq.result(), te.result()]


def check_small_argument(policy: PrecisionPolicy | None = None, **_) -> list[CheckResult]:
    out = []
    for k in (1, 2):
        res = []
        for a in (1e-2, 1e-3, 1e-4):
            lead = math.log(a) ** k / a
            res.append(abs(stieltjes_oracle(k, a).value - lead - stieltjes_constant(k)) * a
                       / abs(math.log(a) ** k))
        mono = all(y < x for x, y in zip(res, res[1:]))
        out.append(CheckResult(f"small_argument.residual_k{k}", res[-1] if mono else math.inf, 1e-2, 3,
                               "residuals " + ", ".join(f"{r:.3e}" for r in res)))
    t = _Tracker("small_argument.reciprocal_forms", 1e-12)
    for m in (10, 100, 1000, 10_000):
        lm = math.log(m)
        f1 = -m * lm + stieltjes_constant(1)
        f2 = m * lm * lm + stieltjes_constant(2)
        t.add(abs(asymptotic_gamma_k(1, 1 / m).value - f1) / abs(f1), f"k=1,m={m}")
        t.add(abs(asymptotic_gamma_k(2, 1 / m).value - f2) / abs(f2), f"k=2,m={m}")
    out.append(t.result())
    return out


def zx_integral_de(z: float, policy: PrecisionPolicy | None = None) -> float:
    """Integral of z^x ln(x)/x over (1, inf) after x = e^t, by the DE rule."""
    policy = policy or get_policy()
    if not 0 < z < 1:
        raise DomainError("z must lie in (0, 1)")
    lz = math.log(z)
    u, _, w = de_nodes(policy.quad_step, policy.quad_halfwidth)
    return math.fsum(wi * ui * math.exp(lz * math.exp(ui)) for ui, wi in zip(u, w)
                     if ui < 700)


def check_hyp3f3(policy: PrecisionPolicy | None = None, **_) -> list[CheckResult]:
    t = _Tracker("hyp3f3.zx_integral", 1e-8)
    for z in (0.1, 0.5, 0.9):
        t.add(abs(hyp3f3_and_zx_integral(z) - zx_integral_de(z, policy)), f"z={z}")
    return [t.result()]


def check_constants(policy: PrecisionPolicy | None = None, **_) -> list[CheckResult]:
    t = _Tracker("constants.published", 1e-12)
    for k, ref in PUBLISHED.items():
        t.add(abs(stieltjes_constant(k) - ref), f"gamma_{k}")
    strict = PRESETS["strict"]
    plan = EulerMaclaurinPlan.from_policy(strict)
    ti = _Tracker("constants.truncation_invariance", 1e-12)
    for k in range(0, 6):
        ti.add(abs(stieltjes_oracle(k, 1.0, plan).value - stieltjes_constant(k)), f"gamma_{k}")
    g, g1 = stieltjes_constant(0), stieltjes_constant(1)
    direct = 1 - math.pi**2 / 8 + 2 * g1 + g * g
    return [t.result(), ti.result(),
            CheckResult("constants.zero_power_sum2", abs(zero_power_sums(2) - direct), 1e-12, 1)]


CHECKS: dict[str, Callable[..., list[CheckResult]]] = {
    "rational_gamma": check_rational_gamma,
    "residue_sums": check_residue_sums,
    "fourier_sums": check_fourier_sums,
    "multiplication": check_multiplication,
    "rational_integrals": check_rational_integrals,
    "family_integrals": check_family_integrals,
    "family_limits": check_family_limits,
    "i2": check_i2,
    "i_omega": check_i_omega,
    "pole": check_pole_integrals,
    "small_argument": check_small_argument,
    "hyp3f3": check_hyp3f3,
    "constants": check_constants,
}

# short names kept for compatibility with the documented CLI examples
ALIASES = {"prop1": "rational_gamma", "cor1": "residue_sums"}


def run_checks(name: str = "all", m_max: int | None = None, q_max: int | None = None,
               policy: PrecisionPolicy | None = None,
               tol: float | None = None) -> list[CheckResult]:
    """Run one named check or all of them, in registry order.

    ``tol`` replaces every per-check tolerance when given.
    """
    name = ALIASES.get(name, name)
    if name != "all" and name not in CHECKS:
        raise KeyError(name)
    names = list(CHECKS) if name == "all" else [name]
    out = []
    for n in names:
        kwargs = {"policy": policy}
        if m_max is not None and n in ("rational_gamma", "fourier_sums"):
            kwargs["m_max"] = m_max
        if q_max is not None and n in ("residue_sums", "rational_integrals"):
            kwargs["q_max"] = q_max
        for r in CHECKS[n](**kwargs):
            out.append(r if tol is None else CheckResult(r.name, r.max_dev, tol, r.cases, r.detail))
    return out
