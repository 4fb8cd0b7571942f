import math
import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from besselfrac import (
    Alpha,
    apply_delta,
    balakrishnan,
    balakrishnan_sine,
    bracket,
    frac_power,
    frac_power_delta,
    frac_power_spectral,
    gauss,
    gauss2,
    gauss_poly,
    gaussian,
    hankel_transform,
    materialize,
    power,
    product,
)
from besselfrac.errors import ClassCheckWarning, DomainError
from besselfrac.fracpow import balakrishnan_constant
from besselfrac.funcspace import zero
from besselfrac.specfun import gamma_complex

XS = np.geomspace(0.01, 8, 64)


def _rel_r(a, b, mu):
    w = XS ** (-mu - 0.5)
    return np.max(np.abs(w * (a - b))) / np.max(np.abs(w * b))


def _neg_s_gauss(mu):
    return (2 * (mu + 1) - XS ** 2) * gauss(mu)(XS)


def test_alpha_defaults():
    assert Alpha(0.5).m == 1
    assert Alpha(1.0).m == 2
    assert Alpha(1.3 + 2j).m == 2
    assert Alpha(0.5, 3).m == 3


@pytest.mark.parametrize("bad", [0.0, -0.3, 0.2j])
def test_alpha_rejects(bad):
    with pytest.raises(DomainError):
        Alpha(bad)


def test_alpha_m_must_exceed():
    with pytest.raises(DomainError):
        Alpha(1.5, 1)


@given(st.floats(0.01, 0.99))
def test_constant_is_sine_for_m1(alpha):
    assert balakrishnan_constant(Alpha(alpha, 1)) == pytest.approx(
        math.sin(alpha * math.pi) / math.pi, rel=1e-12)


def test_constant_complex():
    a = Alpha(0.5 + 0.3j)
    ref = gamma_complex(1) / (gamma_complex(0.5 + 0.3j) * gamma_complex(0.5 - 0.3j))
    assert abs(balakrishnan_constant(a) - ref) < 1e-14


@pytest.mark.parametrize("mu", [-0.25, 0.5, 1.5])
def test_alpha_one_balakrishnan(mu):
    got = balakrishnan(mu, 1.0, gauss(mu))(XS)
    assert _rel_r(got, _neg_s_gauss(mu), mu) < 1e-4


def test_alpha_one_spectral():
    mu = 0.5
    got = frac_power_spectral(mu, 1.0, gauss(mu))(XS)
    assert _rel_r(got, _neg_s_gauss(mu), mu) < 1e-8


def test_alpha_one_extended():
    mu = 0.5
    got = frac_power(mu, 1.0, gauss(mu))(XS)
    assert _rel_r(got, _neg_s_gauss(mu), mu) < 1e-4


@pytest.mark.parametrize("alpha", [0.5, 0.5 + 0.3j])
def test_routes_agree(alpha):
    mu = 0.5
    a = balakrishnan(mu, alpha, gauss(mu))(XS)
    b = frac_power_spectral(mu, alpha, gauss(mu))(XS)
    tol = 1e-3 if isinstance(alpha, complex) else 1e-4
    assert np.all(np.isfinite(a))
    assert _rel_r(a, b, mu) < tol
    if isinstance(alpha, complex):
        assert np.iscomplexobj(a)


def test_extended_form_agrees():
    mu = 0.5
    a = frac_power(mu, 0.75, gauss(mu))(XS)
    b = balakrishnan(mu, 0.75, gauss(mu))(XS)
    assert _rel_r(a, b, mu) < 1e-4


def test_zero_input():
    for fn in (balakrishnan, frac_power):
        assert np.all(fn(0.5, 0.5, zero())(XS) == 0)
    assert np.all(frac_power_delta(0.5, 0.5, zero())(XS) == 0)


def test_sine_form():
    mu = 0.5
    for alpha in (0.25, 0.75):
        a = balakrishnan_sine(mu, alpha, gauss(mu))(XS)
        b = balakrishnan(mu, alpha, gauss(mu))(XS)
        assert np.max(np.abs(a - b)) <= 1e-12 * np.max(np.abs(b))
    with pytest.raises(DomainError):
        balakrishnan_sine(mu, 1.2, gauss(mu))


def test_quarter_power_of_wide_gaussian():
    # y**(mu+1/2) exp(-y**2) has the closed-form transform
    # 2**(-mu-1) x**(mu+1/2) exp(-x**2/4); applying y**(1/2) and transforming
    # back must match the Balakrishnan route
    mu = 0.5
    f = gauss2(mu)
    hf = hankel_transform(mu, f)(XS)
    assert np.allclose(hf, 2 ** (-mu - 1) * XS ** (mu + 0.5) * np.exp(-XS ** 2 / 4), rtol=1e-10)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ClassCheckWarning)
        spec = frac_power_spectral(mu, 0.25, f)(XS)
    assert np.all(np.isfinite(spec))
    assert _rel_r(balakrishnan(mu, 0.25, f)(XS), spec, mu) < 1e-4


def test_spectral_warns_on_slow_decay():
    mu = 0.5
    # transform grows like y**(mu+1/2) near 0 times y**-2 from the multiplier
    f = gauss_poly(mu, 0.5, [1.0])
    with pytest.warns(ClassCheckWarning):
        frac_power_spectral(mu, 1.0, product(power(-3.0), f))


def test_delta_power_one():
    mu = 0.5
    u = gaussian(0.5)
    got = frac_power_delta(mu, 1.0, u)(XS)
    ref = -apply_delta(mu, u)(XS)
    assert np.max(np.abs(got - ref)) <= 1e-6 * np.max(np.abs(ref))


def test_delta_by_construction():
    mu = 0.5
    u = gaussian(0.5)
    a = frac_power_delta(mu, 0.5, u)(XS)
    b = XS ** (-mu - 0.5) * frac_power(mu, 0.5, product(power(mu + 0.5), u))(XS)
    assert np.max(np.abs(a - b)) <= 1e-12 * np.max(np.abs(b))


def test_semigroup_spectral():
    mu = 0.5
    f = gauss(mu)
    for a, b in ((0.5, 0.5), (0.25, 0.75)):
        lhs = frac_power_spectral(mu, a, frac_power_spectral(mu, b, f))(XS)
        rhs = frac_power_spectral(mu, a + b, f)(XS)
        assert _rel_r(lhs, rhs, mu) < 1e-5


def test_bracket_multiplier():
    mu, lam = 0.5, 1.0
    f = gauss(mu)
    b = materialize(bracket(mu, lam, f, m=2), mu)
    lhs = hankel_transform(mu, b)(XS)
    rhs = XS ** 4 / (XS ** 2 + lam) ** 2 * f(XS)
    assert np.max(np.abs(lhs - rhs)) <= 1e-4 * np.max(np.abs(rhs))


def test_bracket_forms_agree():
    mu = 0.5
    f = gauss(mu)
    for lam in (0.3, 1.0, 5.0):
        a = bracket(mu, lam, f, form="difference")(XS)
        b = bracket(mu, lam, f)(XS)
        assert _rel_r(a, b, mu) < 1e-7
    with pytest.raises(DomainError):
        bracket(mu, 1.0, f, form="other")
