import math

import numpy as np
import pytest
from scipy import special

from besselfrac import (
    NormKind,
    apply_delta,
    apply_s,
    gauss,
    gauss_cos,
    gaussian,
    hankel_transform,
    kernel_N,
    kernel_function,
    materialize,
    norm,
    poly_gauss,
    power,
    product,
    resolvent_apply,
    resolvent_spectral,
)
from besselfrac.errors import DomainError
from besselfrac.funcspace import exponential, zero

XS = np.geomspace(0.01, 8, 64)
ORDERS = [-0.25, 0.5, 1.5]


def _rel(a, b):
    return np.max(np.abs(a - b)) / np.max(np.abs(b))


@pytest.mark.parametrize("mu", ORDERS)
@pytest.mark.parametrize("lam", [0.5, 1.0, 4.0])
def test_kernel_norm(mu, lam):
    assert lam * norm(kernel_function(mu, lam), mu, NormKind.L1_SR) == pytest.approx(1, abs=1e-6)


def test_kernel_against_scipy():
    x = np.geomspace(1e-4, 30, 50)
    for mu in ORDERS:
        ref = 2.0 ** (mu / 2) * np.sqrt(x) * special.kv(mu, math.sqrt(2.0) * x)
        assert np.allclose(kernel_N(mu, 2.0, x), ref, rtol=1e-11)


def test_kernel_half_order_closed_form():
    x = np.geomspace(1e-3, 30, 50)
    for lam in (0.5, 2.0):
        ref = math.sqrt(math.pi / 2) * np.exp(-math.sqrt(lam) * x)
        assert np.allclose(kernel_N(0.5, lam, x), ref, rtol=1e-12)


def test_kernel_domain():
    with pytest.raises(DomainError):
        kernel_N(0.5, -1.0, 1.0)
    with pytest.raises(DomainError):
        kernel_N(0.5, 1.0, 0.0)


@pytest.mark.parametrize("mu", ORDERS)
def test_kernel_transform(mu):
    ys = np.array([0.5, 1.0, 2.0])
    for lam in (0.5, 1.0, 4.0):
        got = hankel_transform(mu, kernel_function(mu, lam))(ys)
        ref = ys ** (mu + 0.5) / (lam + ys ** 2)
        assert np.max(np.abs(got - ref) / (1 + np.abs(ref))) < 1e-6


@pytest.mark.parametrize("m", [2, 3])
def test_iterated_kernel_transform(m):
    mu, lam = 0.5, 1.5
    ys = np.array([0.5, 1.0, 2.0])
    got = hankel_transform(mu, kernel_function(mu, lam, m))(ys)
    assert np.allclose(got, ys ** (mu + 0.5) / (lam + ys ** 2) ** m, rtol=1e-9)


@pytest.mark.parametrize("mu", ORDERS)
def test_defect_identity(mu):
    f = gauss(mu)
    r = resolvent_apply(mu, 1.0, f)
    # S moves onto the analytic operand: exact up to quadrature
    lhs = apply_s(mu, r)(XS)
    assert _rel(lhs, r(XS) - f(XS)) < 1e-8
    # the materialized grid goes through spline differentiation
    grid = materialize(r, mu)
    w = XS ** (-mu - 0.5)
    assert _rel(w * apply_s(mu, grid)(XS), w * (grid(XS) - f(XS))) < 1e-4


def test_resolvent_of_zero():
    assert np.all(resolvent_apply(0.5, 1.0, zero())(XS) == 0)


@pytest.mark.parametrize("mu", ORDERS)
def test_routes_agree(mu):
    for f in (gauss(mu), gauss_cos(mu)):
        a = resolvent_apply(mu, 2.0, f)(XS)
        b = resolvent_spectral(mu, 2.0, f)(XS)
        assert _rel(a, b) < 1e-5


def test_spectral_sine_chain():
    # at mu = 1/2 the transform of exp(-y) is sqrt(2/pi) y / (1 + y**2)
    lam = 1.0
    from besselfrac.funcspace import HalfLineFunction

    hf = HalfLineFunction(lambda y: math.sqrt(2 / math.pi) * y / (1 + y * y) / (lam + y * y),
                          decay_hint=60.0)
    ref = hankel_transform(0.5, hf)(XS)
    got = resolvent_spectral(0.5, lam, exponential(1.0))(XS)
    assert _rel(got, ref) < 1e-8


def test_spectral_multiplier_recovers_input():
    mu, lam = 0.5, 2.0
    f = gauss(mu)
    r = resolvent_spectral(mu, lam, f)
    back = hankel_transform(mu, product(materialize(hankel_transform(mu, materialize(r, mu)), mu),
                                        power(2.0) + lam))(XS)
    assert _rel(back, f(XS)) < 1e-5


@pytest.mark.parametrize("lam", [0.25, 1.0, 4.0])
def test_contraction(lam):
    mu = 0.5
    for f in (gauss(mu), poly_gauss(mu)):
        r = materialize(resolvent_apply(mu, lam, f), mu)
        for kind in (NormKind.LINF_R, NormKind.lp(1), NormKind.lp(2)):
            assert lam * norm(r, mu, kind) <= norm(f, mu, kind) * (1 + 1e-6)


def test_resolvent_conjugate():
    # (lam - Delta)**-1 u = r R_lam(r**-1 u)
    mu, lam = 0.5, 1.0
    u = gaussian(0.5)
    g = product(power(-mu - 0.5),
                materialize(resolvent_apply(mu, lam, product(power(mu + 0.5), u)), mu))
    xs = XS[(XS > 0.05) & (XS < 6)]
    assert _rel(lam * g(xs) - apply_delta(mu, g)(xs), u(xs)) < 1e-4


def test_resolvent_of_sampled_input():
    # a cubic-spline table of gauss gives the same resolvent to spline accuracy
    from besselfrac import from_samples

    x = np.geomspace(1e-4, 40, 400)
    f = from_samples(x, gauss(0.5)(x))
    xs = np.geomspace(1e-3, 8, 32)
    got = resolvent_apply(0.5, 2.0, f)(xs)
    ref = resolvent_apply(0.5, 2.0, gauss(0.5))(xs)
    assert np.max(np.abs(got - ref)) <= 1e-6 * np.max(np.abs(ref))
