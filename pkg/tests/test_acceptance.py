"""Acceptance criteria, one test each, at their stated tolerances."""

import math
import time

from stieltjes import (
    MultiplicationQuery,
    Route,
    asymptotic_gamma_k,
    demonstration1_I2,
    digamma,
    gamma1_rational,
    gamma2_fourier,
    gamma2_rational,
    hyp3f3_and_zx_integral,
    integral_family_I,
    integral_family_J,
    integral_I_omega,
    integral_I_pq,
    loglog_quadrature,
    multiplication_digamma,
    multiplication_general,
    multiplication_stieltjes,
    residue_sum,
    stieltjes_constant,
    stieltjes_oracle,
    zero_power_sums,
    zeta_deriv_zero_sums,
)
from stieltjes.closed_forms import hurwitz_derivs_at_zero
from stieltjes.hurwitz import EulerMaclaurinPlan
from stieltjes.loglog import integrand_family_I, integrand_family_J, integrand_I_omega
from stieltjes.policy import PRESETS
from stieltjes.quadrature import LogLogIntegrand
from stieltjes.verify import zx_integral_de


def _fmt(x: float) -> str:
    return f"{x:.3e}"


def test_c01_rational_gamma_closed_forms(acceptance):
    t0 = time.perf_counter()
    d1 = d2 = 0.0
    cases = 0
    for m in range(2, 13):
        for j in range(1, m):
            a = j / m
            d1 = max(d1, abs(gamma1_rational(j, m).value - stieltjes_oracle(1, a).value))
            d2 = max(d2, abs(gamma2_rational(j, m).value - stieltjes_oracle(2, a).value))
            cases += 1
    dt = time.perf_counter() - t0
    acceptance("1 gamma_1, gamma_2 at j/m",
               cases == 66 and d1 <= 1e-9 and d2 <= 1e-8 and dt < 10,
               f"{cases} cases, max dev {_fmt(d1)} / {_fmt(d2)} (tol 1e-9 / 1e-8), {dt:.2f}s (< 10s)")


def test_c02_residue_sum_closure(acceptance):
    t0 = time.perf_counter()
    dev = 0.0
    for k, fn in ((1, gamma1_rational), (2, gamma2_rational)):
        for q in range(1, 11):
            assembled = math.fsum([fn(r, q).value for r in range(1, q)] + [stieltjes_constant(k)])
            dev = max(dev, abs(residue_sum(k, q) - assembled))
    dt = time.perf_counter() - t0
    acceptance("2 residue sums", dev <= 1e-8 and dt < 5,
               f"max dev {_fmt(dev)} (tol 1e-8), {dt:.2f}s (< 5s)")


def test_c03_fourier_and_zeta_sums(acceptance):
    df = 0.0
    for m in range(2, 9):
        g2 = [stieltjes_oracle(2, j / m).value for j in range(1, m)]
        for ell in range(1, m):
            for kind, trig in (("sine", math.sin), ("cosine", math.cos)):
                direct = 0.5 * math.fsum(
                    v * trig(2 * math.pi * ((j * ell) % m) / m) for j, v in enumerate(g2, start=1))
                df = max(df, abs(gamma2_fourier(ell, m, kind) - direct))
    dz = 0.0
    for m in range(2, 11):
        bundles = [hurwitz_derivs_at_zero(ell / m) for ell in range(1, m)]
        for order, field in ((1, "d1"), (2, "d2"), (3, "d3")):
            direct = math.fsum(getattr(b, field) for b in bundles)
            dz = max(dz, abs(zeta_deriv_zero_sums(m, order) - direct))
    acceptance("3 Fourier transforms and zeta-derivative sums", df <= 1e-8 and dz <= 1e-9,
               f"fourier {_fmt(df)} (tol 1e-8), zeta sums {_fmt(dz)} (tol 1e-9)")


def test_c04_multiplication_series(acceptance):
    dp = ds = dg = 0.0
    most = 0
    for k in (0.25, 0.5, 1.5, 1.75):
        for z in (0.5, 1.0, 2.0):
            q = MultiplicationQuery(k, z, terms=400)
            s = multiplication_digamma(q)
            dp = max(dp, abs(s.value - digamma(k * z)))
            most = max(most, s.terms_used)
            for ell in (1, 2):
                st = multiplication_stieltjes(ell, q)
                ds = max(ds, abs(st.value - stieltjes_oracle(ell, k * z).value))
                dg = max(dg, abs(multiplication_general(ell, q).value - st.value))
                most = max(most, st.terms_used)
    acceptance("4 multiplication series",
               dp <= 1e-9 and ds <= 1e-8 and dg <= 1e-10 and most <= 400,
               f"digamma {_fmt(dp)} (1e-9), gamma_l {_fmt(ds)} (1e-8), "
               f"general vs stieltjes {_fmt(dg)} (1e-10), <= {most} terms (400)")


def test_c05_three_routes(acceptance):
    t0 = time.perf_counter()
    dev = imag = 0.0
    for q in range(2, 9):
        for p in range(1, q):
            for k in (1, 2):
                r = integral_I_pq(k, p, q, Route.ROOTS)
                s = integral_I_pq(k, p, q, Route.STIELTJES)
                n = integral_I_pq(k, p, q, Route.QUADRATURE)
                dev = max(dev, abs(r.value - s.value), abs(r.value - n.value), abs(s.value - n.value))
                imag = max(imag, r.imag_residual, s.imag_residual)
    dt = time.perf_counter() - t0
    acceptance("5 rational log-log integrals, three routes",
               dev <= 1e-7 and imag <= 1e-10 and dt < 30,
               f"pairwise {_fmt(dev)} (1e-7), imag {_fmt(imag)} (1e-10), {dt:.2f}s (< 30s)")


def _family_cases():
    yield "I+", integral_family_I(3, 0, "plus"), LogLogIntegrand.rational([1], [1, 1, 1]), 1
    yield "I-", integral_family_I(3, 0, "minus"), LogLogIntegrand.rational([1], [1, -1, 1]), 1
    for p in (1, 2, 5):
        yield f"J_{p}", integral_family_J(p), integrand_family_J(p), 1
        yield f"J_{p}^2", integral_family_J(p, 0, 2), integrand_family_J(p), 2
        for q in (1, 2):
            yield f"J_{p}^q{q}", integral_family_J(p, q), integrand_family_J(p, q), 1
    yield "I_-3^0", integral_family_I(3, 0, "minus"), integrand_family_I(3, 0, "minus"), 1
    for name, d in (("pi/4", math.pi / 4), ("pi/2", math.pi / 2),
                    ("2pi/3", 2 * math.pi / 3), ("pi", math.pi)):
        yield f"I_omega({name})", integral_I_omega(d), integrand_I_omega(d), 1


def test_c06_family_integrals(acceptance):
    worst, label = 0.0, ""
    for name, closed, integrand, k in _family_cases():
        d = abs(closed - loglog_quadrature(integrand, k))
        if d >= worst:
            worst, label = d, name
    g = stieltjes_constant(0)
    lim1 = abs(integral_family_J(1000) + g)
    lim2 = abs(integral_family_J(1000, 0, 2) - (g * g + math.pi**2 / 6))
    acceptance("6 family integrals and limits",
               worst <= 1e-7 and lim1 <= 1e-2 and lim2 <= 1e-2,
               f"vs quadrature {_fmt(worst)} at {label} (1e-7), "
               f"J_p limit {_fmt(lim1)}, J_p^2 limit {_fmt(lim2)} at p=1000 (1e-2)")


def test_c07_i2_closed_forms(acceptance):
    d = demonstration1_I2()
    pair = max(abs(x - y) for x in d.closed_forms for y in d.closed_forms)
    quad = loglog_quadrature(LogLogIntegrand.rational([1], [1, 0, 1]), 1)
    dq = max(abs(f - quad) for f in d.closed_forms)
    steps = max(d.conversion_max_dev, d.lngamma_series_dev,
                abs(d.zeta_prime_series - d.value), abs(d.odd_zeta_series - d.value))
    acceptance("7 I_2 closed forms",
               pair <= 1e-12 and dq <= 1e-9 and steps <= 1e-12,
               f"pairwise {_fmt(pair)} (1e-12), vs quadrature {_fmt(dq)} (1e-9), "
               f"series steps {_fmt(steps)} (1e-12)")


def test_c08_small_argument_asymptotics(acceptance):
    ok = True
    parts = []
    for k in (1, 2):
        res = []
        for a in (1e-2, 1e-3, 1e-4):
            lk = math.log(a) ** k
            res.append(abs(stieltjes_oracle(k, a).value - lk / a - stieltjes_constant(k)) * a / abs(lk))
        ok &= all(y < x for x, y in zip(res, res[1:])) and res[-1] < 1e-2
        parts.append(f"k={k} " + "/".join(_fmt(r) for r in res))
    dev = 0.0
    for m in (10, 100, 1000, 10_000):
        lm = math.log(m)
        forms = {1: -m * lm + stieltjes_constant(1), 2: m * lm * lm + stieltjes_constant(2)}
        for k, f in forms.items():
            dev = max(dev, abs(asymptotic_gamma_k(k, 1 / m).value - f) / abs(f))
    ok &= dev <= 1e-12
    acceptance("8 small-argument asymptotics", ok,
               "residuals " + "; ".join(parts) + f" (decreasing, last < 1e-2), a=1/m forms {_fmt(dev)}")


def test_c09_hypergeometric_identity(acceptance):
    dev = max(abs(hyp3f3_and_zx_integral(z) - zx_integral_de(z)) for z in (0.1, 0.5))
    acceptance("9 3F3 identity", dev <= 1e-8, f"max dev {_fmt(dev)} (1e-8)")


def test_c10_constants(acceptance):
    published = {0: 0.5772156649015329, 1: -0.0728158454836767, 2: -0.0096903631928723}
    dp = max(abs(stieltjes_constant(k) - v) for k, v in published.items())
    plan = EulerMaclaurinPlan.from_policy(PRESETS["strict"])
    di = max(abs(stieltjes_oracle(k, 1.0, plan).value - stieltjes_constant(k)) for k in range(3))
    g, g1 = stieltjes_constant(0), stieltjes_constant(1)
    dz = abs(zero_power_sums(2) - (1 - math.pi**2 / 8 + 2 * g1 + g * g))
    acceptance("10 constants", dp <= 1e-12 and di <= 1e-12 and dz <= 1e-12,
               f"published {_fmt(dp)}, truncation invariance {_fmt(di)}, zero power sum {_fmt(dz)} (1e-12)")
