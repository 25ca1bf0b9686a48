import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stieltjes.closed_forms import (
    MultiplicationQuery,
    asymptotic_gamma_k,
    gamma1_rational,
    gamma2_fourier,
    gamma2_rational,
    gamma_k_at,
    hurwitz_derivs_at_zero,
    multiplication_digamma,
    multiplication_general,
    multiplication_stieltjes,
    residue_sum,
    zeta_deriv_zero_sums,
)
from stieltjes.errors import DomainError, RangeError
from stieltjes.hurwitz import Method, RationalArg, stieltjes_constant, stieltjes_oracle
from stieltjes.specialfn import digamma, log_gamma


@pytest.mark.parametrize("j,m", [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (5, 12)])
def test_rational_gamma_against_mpmath(mp, j, m):
    a = mp.mpf(j) / m
    g1 = gamma1_rational(j, m)
    g2 = gamma2_rational(j, m)
    assert g1.method is Method.CLOSED_FORM
    assert g1.value == pytest.approx(float(mp.stieltjes(1, a)), abs=1e-12)
    assert g2.value == pytest.approx(float(mp.stieltjes(2, a)), abs=1e-11)
    assert 0 < g1.err_estimate < 1e-10


def test_gamma1_half_known_value():
    # gamma_1(1/2) = gamma_1 - 2 gamma ln 2 - ln^2 2
    g = stieltjes_constant(0)
    ref = stieltjes_constant(1) - 2 * g * math.log(2) - math.log(2) ** 2
    assert gamma1_rational(1, 2).value == pytest.approx(ref, abs=1e-14)


def test_rational_domain():
    for j, m in [(0, 3), (3, 3), (1, 1)]:
        with pytest.raises(DomainError):
            gamma1_rational(j, m)


def test_zero_derivs_low_orders(mp):
    d = hurwitz_derivs_at_zero(RationalArg(1, 3))
    assert d.d0 == pytest.approx(0.5 - 1 / 3)
    assert d.d1 == pytest.approx(log_gamma(1 / 3) - 0.5 * math.log(2 * math.pi), abs=1e-15)
    assert d.d2 == pytest.approx(float(mp.zeta(0, mp.mpf(1) / 3, 2)), abs=1e-13)
    with pytest.raises(DomainError):
        hurwitz_derivs_at_zero(1.5)


@pytest.mark.parametrize("k", [1, 2])
def test_residue_sum_trivial(k):
    assert residue_sum(k, 1) == pytest.approx(stieltjes_constant(k), abs=1e-15)


def test_residue_sum_q2(mp):
    ref = mp.stieltjes(1, 0.5) + mp.stieltjes(1)
    assert residue_sum(1, 2) == pytest.approx(float(ref), abs=1e-13)
    with pytest.raises(RangeError):
        residue_sum(3, 2)


def test_fourier_trivial_and_oracle():
    assert gamma2_fourier(1, 2, "sine") == pytest.approx(0.0, abs=1e-13)
    direct = 0.5 * math.fsum(stieltjes_oracle(2, j / 3).value * math.sin(2 * math.pi * j / 3)
                             for j in (1, 2))
    assert gamma2_fourier(1, 3, "sine") == pytest.approx(direct, abs=1e-9)
    direct = 0.5 * math.fsum(stieltjes_oracle(2, j / 4).value * math.cos(2 * math.pi * j / 4)
                             for j in (1, 2, 3))
    assert gamma2_fourier(1, 4, "cosine") == pytest.approx(direct, abs=1e-9)
    with pytest.raises(DomainError):
        gamma2_fourier(1, 4, "tangent")


@pytest.mark.parametrize("m", [2, 5, 9])
def test_three_zeta_sums(mp, m):
    for order in (1, 2, 3):
        ref = mp.fsum(mp.zeta(0, mp.mpf(l) / m, order) for l in range(1, m))
        assert zeta_deriv_zero_sums(m, order) == pytest.approx(float(ref), abs=1e-12)


def test_query_validation():
    with pytest.raises(DomainError):
        MultiplicationQuery(2.0, 1.0)
    with pytest.raises(DomainError):
        MultiplicationQuery(0.5, 0.0)


def test_stretch_one_is_exact():
    q = MultiplicationQuery(1.0, 0.7)
    assert multiplication_digamma(q).value == digamma(0.7)
    assert multiplication_digamma(q).terms_used == 0


@pytest.mark.parametrize("k", [0.25, 0.5, 1.5, 1.75])
@pytest.mark.parametrize("z", [0.5, 1.0, 2.0])
def test_multiplication_series(k, z):
    q = MultiplicationQuery(k, z)
    d = multiplication_digamma(q)
    assert d.value == pytest.approx(digamma(k * z), abs=1e-12)
    assert d.terms_used <= 400
    for ell in (1, 2):
        s = multiplication_stieltjes(ell, q)
        assert s.value == pytest.approx(stieltjes_oracle(ell, k * z).value, abs=1e-11)
        assert multiplication_general(ell, q).value == pytest.approx(s.value, abs=1e-12)


def test_general_multiplication_ell0_and_ell3():
    q = MultiplicationQuery(0.5, 1.0)
    assert multiplication_general(0, q).value == pytest.approx(-digamma(0.5), abs=1e-13)
    assert multiplication_general(3, q).value == pytest.approx(
        stieltjes_oracle(3, 0.5).value, abs=1e-7)
    with pytest.raises(RangeError):
        multiplication_general(4, q)


def test_truncated_series_reports_error():
    q = MultiplicationQuery(1.9, 1.0, terms=10)
    s = multiplication_digamma(q)
    assert s.terms_used == 10
    assert abs(s.value - digamma(1.9)) <= 2 * s.err_estimate


def test_asymptotic_examples():
    v = asymptotic_gamma_k(1, 1e-4)
    assert v.method is Method.ASYMPTOTIC
    assert v.value == pytest.approx(math.log(1e-4) / 1e-4 + stieltjes_constant(1), rel=1e-15)
    assert v.value == pytest.approx(stieltjes_oracle(1, 1e-4).value, rel=1e-4)
    assert asymptotic_gamma_k(2, 0.01).value == pytest.approx(
        100 * math.log(100) ** 2 + stieltjes_constant(2))
    # next correction is -zeta(2) a
    assert asymptotic_gamma_k(0, 1e-3).value == pytest.approx(-digamma(1e-3), abs=2e-3)
    with pytest.raises(DomainError):
        asymptotic_gamma_k(1, 1.0)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2), st.integers(1, 9), st.integers(2, 9))
def test_gamma_k_at_routes(k, j, m):
    x = Fraction(j, m)
    assert gamma_k_at(k, x) == pytest.approx(stieltjes_oracle(k, float(x)).value,
                                             rel=1e-11, abs=1e-11)
