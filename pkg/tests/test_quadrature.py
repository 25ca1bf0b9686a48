import math

import pytest

from stieltjes.errors import DomainError
from stieltjes.policy import DEFAULT_POLICY
from stieltjes.quadrature import LogLogIntegrand, PowerSum, de_nodes, loglog_quadrature


def test_power_sum_exact_zero_at_one():
    p = PowerSum.from_coeffs([3, 0, -3])
    assert p.at_one_is_zero()
    assert p(0.5) == pytest.approx(3 - 0.75)
    assert p.lowest_exponent() == 0


def test_constant_integrands():
    one = LogLogIntegrand.rational([1], [1])
    g = 0.5772156649015329
    assert loglog_quadrature(one, 0) == pytest.approx(1.0, abs=1e-15)
    assert loglog_quadrature(one, 1) == pytest.approx(-g, abs=1e-15)
    assert loglog_quadrature(one, 2) == pytest.approx(g * g + math.pi**2 / 6, abs=1e-14)


def test_against_mpmath(mp):
    f = LogLogIntegrand.rational([1], [1, 0, 1])
    ref = mp.quad(lambda x: mp.log(-mp.log(x)) / (1 + x * x), [0, 0.5, 1])
    assert loglog_quadrature(f, 1) == pytest.approx(float(ref), abs=1e-14)


def test_removable_endpoint():
    # (1 - x^2)/(1 - x) = 1 + x; cancellation at x = 1 must be harmless
    a = LogLogIntegrand.rational([1, 0, -1], [1, -1])
    b = LogLogIntegrand.rational([1, 1], [1])
    assert loglog_quadrature(a, 2) == pytest.approx(loglog_quadrature(b, 2), abs=1e-14)


@pytest.mark.parametrize("num,den", [([1], [0, 1]), ([1], [1, -1]), ([1], [1, -3])])
def test_rejects_bad_integrands(num, den):
    with pytest.raises(DomainError):
        LogLogIntegrand.rational(num, den)


def test_rejects_negative_power():
    with pytest.raises(DomainError):
        loglog_quadrature(LogLogIntegrand.rational([1], [1]), -1)


def test_step_halving_converges():
    f = LogLogIntegrand.rational([2, 0, -2], [1, 0, 0, 0, -1])
    fine = DEFAULT_POLICY.with_(quad_step=DEFAULT_POLICY.quad_step / 2)
    for k in (1, 2):
        assert abs(loglog_quadrature(f, k) - loglog_quadrature(f, k, fine)) < 1e-10


def test_nodes_are_cached_and_positive():
    u, lu, w = de_nodes(0.05, 6.0)
    assert de_nodes(0.05, 6.0)[0] is u
    assert min(u) > 0 and min(w) > 0
    assert all(math.isclose(math.log(x), y, rel_tol=1e-12, abs_tol=1e-12) for x, y in zip(u, lu))
