"""Built-in test functions with closed-form derivatives."""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .funcspace import HalfLineFunction, check_order, cosine, exponential, gaussian, power, product

__all__ = ["gauss_poly", "as_gauss_poly", "gauss", "gauss2", "poly_gauss", "gauss_cos", "exp_decay", "BUILTINS", "builtin"]


def _named(f, label, hint=None):
    f.label = label
    if hint is not None:
        f._decay = hint
    return f


def _gauss_poly_decay(a, b, coeffs):
    # last point where x**a e**(-b x**2) |P(x**2)| exceeds 1e-17 of its peak
    xs = np.linspace(1e-3, 40.0 / math.sqrt(b), 8000)
    w = xs * xs
    v = np.abs(xs ** a * np.exp(-b * w) * np.polynomial.polynomial.polyval(w, coeffs))
    big = np.nonzero(v > 1e-17 * v.max())[0]
    return float(xs[min(big[-1] + 1, len(xs) - 1)])


def gauss_poly(mu, b, coeffs, label=None):
    """``x**(mu+1/2) exp(-b x**2) P(x**2)`` with ``P`` given by ascending coefficients.

    The family is closed under ``S_mu``, which acts on ``P`` by exact
    polynomial algebra; this avoids the cancellation between ``f''`` and
    the ``x**-2`` potential term near the origin.  ``r f`` is also
    available directly for use inside translation integrals.
    """
    mu = check_order(mu)
    b = float(b)
    a = mu + 0.5
    coeffs = np.asarray(coeffs)
    coeffs = coeffs.astype(complex if np.iscomplexobj(coeffs) else float)
    P = np.polynomial.Polynomial(coeffs)
    # P(x**2) as a polynomial in x, for derivative jets
    px = np.polynomial.Polynomial(np.ravel(np.column_stack(
        [P.coef, np.zeros_like(P.coef)]))[:-1] if len(P.coef) else [0.0])
    poly_x = HalfLineFunction(lambda x: px(x), order=64,
                              jet=lambda x, n: np.array([px.deriv(k)(x) if k else px(x)
                                                         for k in range(n + 1)]))
    base = product(product(power(a), gaussian(b)), poly_x)

    polyval = np.polynomial.polynomial.polyval
    pc = P.coef

    def r_sq(w):
        return np.exp(-b * w) * polyval(w, pc)

    def r_form(x):
        return r_sq(x * x)

    def ev(x):
        return x ** a * r_form(x)

    f = HalfLineFunction(ev, jet=base._jet, order=64,
                         decay_hint=_gauss_poly_decay(a, b, P.coef),
                         label=label or f"gauss_poly(b={b:g},{list(P.coef)})")
    f.r_evaluator = r_form
    f.r_sq_evaluator = r_sq
    # r f with its own jets, free of the x**a x**-a cancellation near 0
    f.r_function = product(gaussian(b), poly_x)
    f.r_mu = mu
    f.poly = P

    def s_image(mu2):
        if mu2 != mu:
            return None
        w = np.polynomial.Polynomial([0.0, 1.0])
        d1, d2 = P.deriv(1), P.deriv(2)
        q = 4 * w * (d2 - 2 * b * d1 + b * b * P) + (4 * mu + 4) * (d1 - b * P)
        return gauss_poly(mu, b, q.coef, label=f"S({f.label})")

    f.s_image = s_image
    f.family = ("gauss_poly", mu, b)
    f.family_combine = lambda terms: _combine(mu, b, terms)
    return f


def _combine(mu, b, terms):
    n = max(len(g.poly.coef) for _, g in terms)
    acc = np.zeros(n, dtype=complex)
    for c, g in terms:
        acc[:len(g.poly.coef)] += c * g.poly.coef
    if not np.any(acc.imag):
        acc = acc.real
    return gauss_poly(mu, b, acc, label=" + ".join(f"{c}*({g.label})" for c, g in terms))


def as_gauss_poly(mu, f):
    """Rewrite ``c x**p exp(-b x**2)`` as a :func:`gauss_poly` when it is one.

    Needs ``b > 0`` and ``p - mu - 1/2`` a non-negative even integer; other
    functions are returned unchanged.
    """
    if getattr(f, "family", None) is not None:
        return f
    mono = getattr(f, "monomial", None)
    if mono is None:
        return f
    c, p, b = mono
    k = (p - mu - 0.5) / 2.0
    if not b > 0 or k < 0 or abs(k - round(k)) > 1e-12:
        return f
    coeffs = np.zeros(int(round(k)) + 1)
    coeffs[-1] = c
    out = gauss_poly(mu, b, coeffs, label=f.label)
    if f._decay is not None and not callable(f._decay):
        out._decay = max(out._decay, f._decay)
    return out


def gauss(mu):
    """``x**(mu + 1/2) exp(-x**2 / 2)``, its own Hankel transform."""
    return gauss_poly(mu, 0.5, [1.0], "gauss")


def gauss2(mu):
    """``x**(mu + 1/2) exp(-x**2)``."""
    return gauss_poly(mu, 1.0, [1.0], "gauss2")


def poly_gauss(mu):
    """``x**(mu + 5/2) exp(-x**2 / 2)``."""
    return gauss_poly(mu, 0.5, [0.0, 1.0], "poly_gauss")


def gauss_cos(mu):
    """``x**(mu + 1/2) exp(-x**2 / 2) cos x``."""
    mu = check_order(mu)
    return _named(product(product(power(mu + 0.5), gaussian(0.5)), cosine(1.0)),
                  "gauss_cos", 9.6)


def exp_decay(mu=0.5):
    """``exp(-x)``; meaningful as a transform input for ``mu = 1/2`` only."""
    mu = check_order(mu)
    if not math.isclose(mu, 0.5):
        raise DomainError("builtin 'exp' is only offered for mu = 1/2")
    return _named(exponential(1.0), "exp", 42.0)


BUILTINS = {
    "gauss": gauss,
    "gauss2": gauss2,
    "poly_gauss": poly_gauss,
    "gauss_cos": gauss_cos,
    "exp": exp_decay,
}


def builtin(name, mu):
    """Look up a built-in function by name."""
    try:
        return BUILTINS[name](mu)
    except KeyError:
        raise DomainError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}") from None
