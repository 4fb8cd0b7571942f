import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate as sint

from besselfrac import (
    NormKind,
    approx_identity_member,
    c_mu,
    convolve,
    gauss,
    gauss2,
    gauss_cos,
    hankel_transform,
    integrate,
    kernel_D,
    materialize,
    norm,
    poly_gauss,
)
from besselfrac.errors import ClassCheckWarning, DomainError
from besselfrac.funcspace import HalfLineFunction, constant, zero
from besselfrac.hconv import angular_constant

XS = np.geomspace(0.01, 8, 64)
ORDERS = [-0.25, 0.5, 1.5]


def _rel(a, b):
    return np.max(np.abs(a - b)) / np.max(np.abs(b))


def test_kernel_outside_triangle():
    for mu in ORDERS:
        assert kernel_D(mu, 1.0, 1.0, 3.0) == 0.0
        assert kernel_D(mu, 1.0, 3.0, 1.0) == 0.0


@given(st.sampled_from(ORDERS), st.floats(0.1, 3), st.floats(0.1, 3), st.floats(0.1, 3))
def test_kernel_symmetric(mu, x, y, z):
    a = kernel_D(mu, x, y, z)
    assert kernel_D(mu, x, z, y) == pytest.approx(a, rel=1e-12, abs=0)
    assert kernel_D(mu, y, x, z) == pytest.approx(a, rel=1e-12, abs=0)
    assert a >= 0


def test_kernel_domain():
    with pytest.raises(DomainError):
        kernel_D(0.5, 0.0, 1.0, 1.0)


def test_kernel_moment():
    mu, x, y = 0.5, 1.0, 2.0
    got, _ = sint.quad(lambda z: z ** (mu + 0.5) * kernel_D(mu, x, y, z), abs(x - y), x + y,
                       epsabs=0, epsrel=1e-13)
    assert got == pytest.approx((x * y) ** (mu + 0.5) / c_mu(mu), rel=1e-10)


def test_angular_form_against_direct_double_integral():
    # mu = 3/2 keeps the triangle kernel regular at the edges
    mu, x = 1.5, 1.3
    f, g = gauss(mu), gauss_cos(mu)

    def inner(y):
        val, _ = sint.quad(lambda z: kernel_D(mu, x, y, z) * g(np.array([z]))[0],
                           abs(x - y), x + y, epsabs=1e-15, epsrel=1e-11)
        return f(np.array([y]))[0] * val

    ref, _ = sint.quad(inner, 0, 10, epsabs=0, epsrel=1e-11, limit=200)
    got = convolve(mu, f, g)(np.array([x]))[0]
    assert got == pytest.approx(ref, rel=1e-9)
    assert angular_constant(mu) == pytest.approx(1 / (2 ** mu * math.gamma(mu + 0.5) * math.sqrt(math.pi)))


@pytest.mark.parametrize("mu", ORDERS)
def test_gaussian_self_convolution(mu):
    # transform of phi # phi is r phi**2 = x**(mu+1/2) exp(-x**2), whose
    # transform is 2**(-mu-1) x**(mu+1/2) exp(-x**2/4)
    got = convolve(mu, gauss(mu), gauss(mu))(XS)
    ref = 2.0 ** (-mu - 1) * XS ** (mu + 0.5) * np.exp(-XS ** 2 / 4)
    assert _rel(got, ref) < 1e-9


@pytest.mark.parametrize("mu", [0.5, 1.5])
def test_convolution_theorem(mu):
    f, g = gauss2(mu), poly_gauss(mu)
    fg = materialize(convolve(mu, f, g), mu)
    lhs = hankel_transform(mu, fg)(XS)
    rhs = XS ** (-mu - 0.5) * hankel_transform(mu, f)(XS) * hankel_transform(mu, g)(XS)
    assert _rel(lhs, rhs) < 1e-5


def test_commutative():
    mu = 0.5
    a = convolve(mu, gauss2(mu), gauss_cos(mu))(XS)
    b = convolve(mu, gauss_cos(mu), gauss2(mu))(XS)
    assert _rel(a, b) < 1e-9


def test_convolve_zero():
    assert np.all(convolve(0.5, gauss(0.5), zero())(XS) == 0)


def test_class_check_warning():
    with pytest.warns(ClassCheckWarning):
        convolve(0.5, constant(1.0), gauss(0.5), check=True)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        convolve(0.5, gauss(0.5), constant(1.0), check=True)


@pytest.mark.parametrize("mu", [0.5])
def test_young(mu):
    for f, g in ((gauss(mu), gauss2(mu)), (poly_gauss(mu), gauss_cos(mu))):
        fg = materialize(convolve(mu, f, g), mu)
        nf = norm(f, mu, NormKind.L1_SR)
        for kind in (NormKind.LINF_R, NormKind.lp(1), NormKind.lp(2)):
            assert norm(fg, mu, kind) <= nf * norm(g, mu, kind) * (1 + 1e-8)


def test_approx_identity_member():
    mu = 0.5
    tails = []
    for n in (1, 2, 4, 8, 16):
        phi = approx_identity_member(mu, n)
        v = phi(XS)
        assert np.all(v >= 0)
        assert np.all(v[n * XS < 30] > 0)
        g = HalfLineFunction(lambda x, phi=phi: phi(x) * x ** (mu + 0.5) / c_mu(mu),
                             decay_hint=phi.decay_hint, scale=phi.scale)
        assert integrate(g)[0] == pytest.approx(1.0, abs=1e-8)
        tails.append(integrate(g, lo=0.5, hi=60.0)[0])
    assert all(a > b for a, b in zip(tails, tails[1:]))
    assert tails[-1] < 1e-10


@settings(deadline=None, max_examples=5)
@given(st.sampled_from([0.5, 1.0, 2.0]))
def test_approximate_identity(x0):
    mu = 0.5
    f = gauss(mu)
    x = np.array([x0])
    errs = [abs(convolve(mu, f, approx_identity_member(mu, n))(x)[0] - f(x)[0])
            for n in (2, 4, 8, 16)]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert errs[-1] <= 1e-2
