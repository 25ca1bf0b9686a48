import math

import pytest
from hypothesis import given, settings, strategies as st

from stieltjes.errors import DomainError, PoleError, RangeError
from stieltjes.hurwitz import (
    EulerMaclaurinPlan,
    Method,
    RationalArg,
    StieltjesValue,
    _pochhammer_derivs,
    hurwitz_derivs,
    hurwitz_zeta,
    hurwitz_zeta_sderiv,
    stieltjes_constant,
    stieltjes_oracle,
    stieltjes_shift,
)


class TestRationalArg:
    def test_unreduced(self):
        assert RationalArg(2, 4) != RationalArg(1, 2)
        assert RationalArg(2, 4).fraction == RationalArg(1, 2).fraction

    def test_parse(self):
        r = RationalArg.parse(" 3 / 7 ")
        assert (r.num, r.den) == (3, 7)
        assert str(r) == "3/7"
        assert r.as_real == 3 / 7

    @pytest.mark.parametrize("text", ["3", "a/b", "-1/2", "1/0"])
    def test_rejects(self, text):
        with pytest.raises(DomainError):
            RationalArg.parse(text)


def test_value_rejects_negative_error():
    with pytest.raises(DomainError):
        StieltjesValue(1, 0.5, 0.0, Method.ORACLE, -1.0)


def test_plan_validation():
    with pytest.raises(DomainError):
        EulerMaclaurinPlan(tail_order=7)
    with pytest.raises(RangeError):
        EulerMaclaurinPlan(derivative_order=4)


def test_pochhammer_derivs_at_zero():
    # (s)_3 = s(s+1)(s+2) = s^3 + 3s^2 + 2s
    assert _pochhammer_derivs(0.0, 3, 3) == [0.0, 2.0, 6.0, 6.0]


@pytest.mark.parametrize("s,a", [(2.0, 1.0), (0.5, 0.3), (-1.5, 2.0), (0.0, 0.25),
                                 (3.7, 0.01), (40.0, 0.8)])
def test_hurwitz_zeta_matches_mpmath(mp, s, a):
    ref = float(mp.zeta(s, a))
    assert hurwitz_zeta(s, a) == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("order", [1, 2, 3])
@pytest.mark.parametrize("s,a", [(0.0, 0.2), (2.0, 0.7), (-0.5, 1.5), (35.0, 1.2)])
def test_sderivs_match_mpmath(mp, order, s, a):
    ref = float(mp.zeta(s, a, order))
    assert hurwitz_zeta_sderiv(order, s, a) == pytest.approx(ref, rel=1e-12, abs=1e-14)


def test_hurwitz_errors():
    with pytest.raises(PoleError):
        hurwitz_zeta(1.0, 0.5)
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, 0.0)
    with pytest.raises(RangeError):
        hurwitz_derivs(2.0, 1.0, 4)


def test_error_estimate_is_small():
    _, err = hurwitz_derivs(2.0, 0.5, 3)
    assert 0 <= err < 1e-12


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("a", [1e-3, 0.04, 0.3, 1.0, 2.5, 17.0])
def test_oracle_matches_mpmath(mp, k, a):
    ref = float(mp.stieltjes(k, a))
    v = stieltjes_oracle(k, a)
    assert v.method is Method.ORACLE
    assert v.value == pytest.approx(ref, rel=1e-12, abs=1e-13)


def test_oracle_domain():
    with pytest.raises(DomainError):
        stieltjes_oracle(1, -0.5)
    with pytest.raises(RangeError):
        stieltjes_oracle(6, 0.5)


def test_gamma0_is_minus_digamma(mp):
    for a in (0.1, 0.5, 3.0):
        assert stieltjes_oracle(0, a).value == pytest.approx(-float(mp.digamma(a)), rel=1e-14)


def test_laurent_limit_relation():
    # gamma_k(a) = lim_N [sum_{n<=N} ln^k(n+a)/(n+a) - ln^{k+1}(N+a)/(k+1)]; check a slow partial sum
    a, k, N = 0.5, 1, 200_000
    partial = math.fsum(math.log(n + a) ** k / (n + a) for n in range(N + 1))
    approx = partial - math.log(N + a) ** (k + 1) / (k + 1)
    assert approx == pytest.approx(stieltjes_oracle(k, a).value, abs=1e-4)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.floats(0.05, 4.0), st.integers(0, 6))
def test_shift_identity(k, a, n):
    shifted = stieltjes_shift(k, a, n)
    assert shifted == pytest.approx(stieltjes_oracle(k, a + n).value, rel=1e-11, abs=1e-12)


def test_shift_with_supplied_value():
    v = stieltjes_constant(1)
    assert stieltjes_shift(1, 1.0, 0, v) == v
    with pytest.raises(DomainError):
        stieltjes_shift(1, 1.0, -1)


def test_plan_changes_do_not_move_constants():
    coarse = EulerMaclaurinPlan(20, 20)
    for k in range(4):
        assert stieltjes_oracle(k, 1.0, coarse).value == pytest.approx(
            stieltjes_constant(k), abs=1e-13)
