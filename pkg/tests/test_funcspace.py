import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from besselfrac import (
    DEFAULT_SPEC,
    NormKind,
    QuadratureSpec,
    c_mu,
    from_samples,
    gauss,
    gauss2,
    gauss_cos,
    gaussian,
    integrate,
    kernel_function,
    norm,
    poly_gauss,
    power,
    product,
    seminorm_gamma,
    seminorm_rho,
    weight_r,
    weight_s,
)
from besselfrac.errors import DecayWarning, DomainError, InsufficientDerivativesError
from besselfrac.funcspace import exponential, lincomb, zero


def test_weight_r_values():
    assert weight_r(0.5, 1.0) == 1.0
    assert weight_r(0.5, 4.0) == pytest.approx(0.25, rel=1e-15)
    assert weight_r(-0.25, 2.0) == pytest.approx(2 ** -0.25, rel=1e-15)


def test_weight_s_values():
    assert weight_s(0.5, 1.0) == pytest.approx(1 / (math.sqrt(2) * math.gamma(1.5)), rel=1e-14)
    assert weight_s(0.5, 2.0) == pytest.approx(4 / c_mu(0.5), rel=1e-14)


@given(st.sampled_from([-0.25, 0.0, 0.5, 1.5, 3.0]), st.floats(1e-5, 1e3))
def test_weight_product(mu, x):
    assert weight_s(mu, x) * weight_r(mu, x) == pytest.approx(1 / (weight_r(mu, x) * c_mu(mu)),
                                                              rel=1e-13)


def test_weight_domain():
    with pytest.raises(DomainError):
        weight_r(0.5, 0.0)
    with pytest.raises(DomainError):
        weight_s(-0.6, 1.0)


def test_integrate_examples():
    # the window (1e-8, 40) itself removes about 1e-8 of the mass
    val, err = integrate(exponential(1.0), DEFAULT_SPEC.with_(x_max=40.0))
    assert val == pytest.approx(math.exp(-1e-8) - math.exp(-40.0), abs=1e-10)
    assert val == pytest.approx(1.0, abs=2e-8)
    mu, n = 0.5, 2
    g = product(power(2 * mu + 1), gaussian(n * n / 2))
    val, _ = integrate(g)
    assert val == pytest.approx(2 ** mu * math.gamma(mu + 1) * n ** (-2 * mu - 2), rel=1e-10)
    assert integrate(zero())[0] == 0


def test_spec_validation():
    with pytest.raises(DomainError):
        QuadratureSpec(rel_tol=0)
    with pytest.raises(DomainError):
        QuadratureSpec(x_min=2, x_max=1)
    with pytest.raises(DomainError):
        NormKind("Lp_srp", 0.5)


def test_norm_examples():
    mu = 0.5
    assert norm(kernel_function(mu, 2.0), mu, NormKind.L1_SR) == pytest.approx(0.5, rel=1e-9)
    for kind in (NormKind.LINF_R, NormKind.L1_SR, NormKind.Y, NormKind.lp(2)):
        assert norm(zero(), mu, kind) == 0
    assert norm(gauss(mu), mu, NormKind.LINF_R) == pytest.approx(1.0, rel=1e-12)


def test_norm_l1_closed_form():
    # int e**(-x**2/2) x**(2mu+1) dx / c_mu = 1 for every order
    for mu in (-0.25, 0.5, 1.5):
        assert norm(gauss(mu), mu, NormKind.L1_SR) == pytest.approx(1.0, rel=1e-10)


@pytest.mark.parametrize("mu", [0.5, 1.5])
def test_interpolation_bound(mu):
    for f in (gauss(mu), gauss2(mu), poly_gauss(mu), gauss_cos(mu)):
        ninf = norm(f, mu, NormKind.LINF_R)
        n1 = norm(f, mu, NormKind.L1_SR)
        for p in (1, 2, 4):
            lhs = norm(f, mu, NormKind.lp(p))
            assert lhs <= ninf ** ((p - 1) / p) * n1 ** (1 / p) * (1 + 1e-8)


def test_y_norm_bounded_by_seminorms():
    # one constant works for every corpus member
    ratios = []
    for mu in (-0.25, 0.5, 1.5):
        m = math.ceil(2 * mu + 3)
        for f in (gauss(mu), gauss2(mu), poly_gauss(mu), gauss_cos(mu)):
            y = norm(f, mu, NormKind.Y)
            ratios.append(y / (seminorm_gamma(f, mu, 0, 0) + seminorm_gamma(f, mu, m, 0)))
    assert max(ratios) < 10.0


def test_seminorm_gamma_examples():
    mu = 0.5
    f = gauss(mu)
    assert seminorm_gamma(f, mu, 0, 0) == pytest.approx(1.0, rel=1e-12)
    assert seminorm_gamma(f, mu, 0, 1) == pytest.approx(1.0, rel=1e-10)
    # interior maximum at sqrt(2): resolution of the sampled sup is about 1e-9
    assert seminorm_gamma(f, mu, 2, 0) == pytest.approx(2 / math.e, rel=1e-8)


def test_seminorm_needs_derivatives():
    f = from_samples(np.linspace(0.1, 6, 50), np.exp(-np.linspace(0.1, 6, 50) ** 2))
    with pytest.raises(InsufficientDerivativesError):
        seminorm_gamma(f, 0.5, 0, 3)


def test_seminorm_rho_examples():
    mu = 0.5
    f = gauss(mu)
    assert seminorm_rho(f, mu, 0) == pytest.approx(norm(f, mu, NormKind.Y), rel=1e-14)
    sf = product(lincomb([(1.0, power(2.0)), (-2 * (mu + 1), power(0.0))]), f)
    ref = max(norm(f, mu, NormKind.Y), norm(sf, mu, NormKind.Y))
    assert seminorm_rho(f, mu, 1) == pytest.approx(ref, rel=1e-9)
    assert seminorm_rho(zero(), mu, 3) == 0


def test_from_samples_knots_exact():
    x = np.geomspace(0.01, 6, 300)
    v = np.exp(-x * x) * np.cos(x)
    f = from_samples(x, v)
    assert np.array_equal(f(x), v)
    assert f(np.array([7.0, 1e-3]))[0] == 0


def test_from_samples_validation():
    with pytest.raises(DomainError):
        from_samples([1.0, 0.5], [0.0, 0.0])
    with pytest.raises(DomainError):
        from_samples([0.0, 1.0], [0.0, 0.0])


def test_decay_warning():
    with pytest.warns(DecayWarning):
        from_samples([0.5, 1.0, 2.0], [1.0, 1.0, 1.0])
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        from_samples([0.5, 1.0, 2.0], [1.0, 0.5, 0.0])


def test_jets_of_products():
    x = np.linspace(0.2, 3, 7)
    f = product(power(1.5), gaussian(0.5))
    j = f.jet(x, 2)
    d1 = 1.5 * x ** 0.5 * np.exp(-x * x / 2) - x ** 2.5 * np.exp(-x * x / 2)
    assert np.allclose(j[1], d1, rtol=1e-13)


@settings(deadline=None, max_examples=25)
@given(st.floats(-3, 3), st.floats(-3, 3))
def test_integrate_linear(a, b):
    f, g = gauss(0.5), gauss_cos(0.5)
    lhs = integrate(lincomb([(a, f), (b, g)]))[0]
    rhs = a * integrate(f)[0] + b * integrate(g)[0]
    assert abs(lhs - rhs) <= 1e-9 * (abs(a) + abs(b) + 1)
