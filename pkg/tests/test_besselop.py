import numpy as np
import pytest
from hypothesis import given, strategies as st

from besselfrac import (
    MultiplierConjugation,
    apply_delta,
    apply_s,
    apply_s_power,
    conjugate_apply,
    dilate,
    gauss,
    gaussian,
    hankel_transform,
    pairing,
    power,
    product,
    sturm_liouville,
)
from besselfrac.errors import DomainError, InsufficientDerivativesError
from besselfrac.funcspace import constant, from_samples, sine

XS = np.geomspace(0.01, 8, 64)
ORDERS = [-0.25, 0.5, 1.5]


@pytest.mark.parametrize("mu", ORDERS)
def test_delta_examples(mu):
    assert np.allclose(apply_delta(mu, power(2.0))(XS), 4 * mu + 4, rtol=1e-13)
    assert np.all(apply_delta(mu, constant(1.0))(XS) == 0)
    v = apply_delta(mu, power(-2 * mu))(XS)
    assert np.max(np.abs(v * XS ** (2 * mu + 2))) < 1e-12


@pytest.mark.parametrize("mu", ORDERS)
def test_s_on_gaussian(mu):
    # jets route against the closed form (x**2 - 2(mu+1)) phi_G
    f = product(power(mu + 0.5), gaussian(0.5))
    ref = (XS ** 2 - 2 * (mu + 1)) * gauss(mu)(XS)
    assert np.allclose(apply_s(mu, f)(XS), ref, rtol=1e-10, atol=1e-15)
    assert np.allclose(apply_s(mu, gauss(mu))(XS), ref, rtol=1e-13, atol=1e-16)


@pytest.mark.parametrize("mu", ORDERS)
def test_s_null_solution(mu):
    v = apply_s(mu, power(mu + 0.5))(XS)
    assert np.max(np.abs(v)) < 1e-12


def test_s_half_is_second_derivative():
    assert np.allclose(apply_s(0.5, sine(1.0))(XS), -np.sin(XS), atol=1e-15)


@pytest.mark.parametrize("mu", ORDERS)
def test_s_power_two(mu):
    # S applied twice via jets against the polynomial closed form
    f = product(power(mu + 0.5), gaussian(0.5))
    x2 = XS ** 2
    p = x2 - 2 * (mu + 1)
    # S[p phi] = (p (x**2 - 2(mu+1)) + p'' + 2 p' (a/x - x)) phi with p' = 2x, p'' = 2
    a = mu + 0.5
    ref = (p * p + 2 + 4 * (a - x2)) * gauss(mu)(XS)
    assert np.allclose(apply_s_power(mu, f, 2)(XS), ref, rtol=1e-8, atol=1e-12)
    assert np.allclose(apply_s_power(mu, gauss(mu), 2)(XS), ref, rtol=1e-12, atol=1e-14)
    assert apply_s_power(mu, f, 0) is f


@pytest.mark.parametrize("mu", ORDERS)
@pytest.mark.parametrize("l", [0.5, 2.0])
@pytest.mark.parametrize("k", [1, 2])
def test_scaling_law(mu, l, k):
    g = product(power(mu + 0.5), gaussian(0.5))
    lhs = apply_s_power(mu, dilate(g, l), k)(XS)
    rhs = l ** (2 * k) * apply_s_power(mu, g, k)(l * XS)
    assert np.allclose(lhs, rhs, rtol=1e-8, atol=1e-14)


def test_insufficient_derivatives():
    grid = from_samples(np.linspace(0.1, 6, 40), np.exp(-np.linspace(0.1, 6, 40) ** 2))
    apply_s(0.5, grid)
    with pytest.raises(InsufficientDerivativesError):
        apply_s_power(0.5, grid, 2)(XS)


def test_sturm_liouville_examples():
    mu = 0.5
    assert np.all(sturm_liouville(mu, constant(1.0))(XS) == 0)
    assert np.allclose(sturm_liouville(mu, power(2.0))(XS), (4 * mu + 4) * XS ** (2 * mu + 1))


def test_sturm_liouville_symmetric():
    # bumps well away from the origin behave as compactly supported
    mu = 0.5
    f = product(power(4.0), gaussian(4.0))
    g = dilate(product(power(4.0), gaussian(4.0)), 0.8)
    a = pairing(sturm_liouville(mu, f), g)
    b = pairing(f, sturm_liouville(mu, g))
    assert a == pytest.approx(b, rel=1e-9)


@pytest.mark.parametrize("mu", ORDERS)
def test_conjugation(mu):
    f = gauss(mu)
    conj = MultiplierConjugation.power(mu + 0.5)
    lhs = conjugate_apply(lambda h: apply_delta(mu, h), conj, f)(XS)
    assert np.allclose(lhs, apply_s(mu, f)(XS), rtol=1e-8, atol=1e-14)
    ident = MultiplierConjugation(constant(1.0), constant(1.0))
    assert np.allclose(conjugate_apply(lambda h: apply_s(mu, h), ident, f)(XS), apply_s(mu, f)(XS))
    e = gaussian(1.0)
    inv = MultiplierConjugation.power(-mu - 0.5)
    lhs = conjugate_apply(lambda h: apply_s(mu, h), inv, e)(XS)
    assert np.allclose(lhs, apply_delta(mu, e)(XS), rtol=1e-8, atol=1e-12)


def test_conjugation_positive_multiplier():
    assert MultiplierConjugation.power(1.0).check(XS)
    with pytest.raises(DomainError):
        MultiplierConjugation(constant(-1.0), constant(-1.0)).check(XS)


@pytest.mark.parametrize("mu", ORDERS)
def test_transform_intertwining(mu):
    f = gauss(mu)
    lhs = hankel_transform(mu, apply_s(mu, f))(XS)
    rhs = -XS ** 2 * hankel_transform(mu, f)(XS)
    assert np.max(np.abs(lhs - rhs)) <= 1e-5 * np.max(np.abs(rhs))
    lhs = apply_s(mu, hankel_transform(mu, f))(XS)
    rhs = hankel_transform(mu, product(power(2.0, -1.0), f))(XS)
    assert np.max(np.abs(lhs - rhs)) <= 1e-5 * np.max(np.abs(rhs))


@given(st.floats(-0.45, 4.0), st.floats(0.05, 6.0))
def test_s_of_pure_power(mu, p):
    # S x**p = (p(p-1) - (mu**2 - 1/4)) x**(p-2)
    x = np.array([0.3, 1.0, 2.5])
    got = apply_s(mu, power(p))(x)
    ref = (p * (p - 1) - (mu * mu - 0.25)) * x ** (p - 2)
    assert np.allclose(got, ref, rtol=1e-10, atol=1e-10)
