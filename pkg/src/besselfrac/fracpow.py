"""Complex fractional powers of -S_mu and -Delta_mu.

Three routes are provided:

* :func:`balakrishnan` evaluates the Balakrishnan integral
  ``C int_0^inf lam**(alpha-1) [A (lam + A)**-1]**m f dlam`` with
  ``A = -S_mu`` and ``C = Gamma(m) / (Gamma(alpha) Gamma(m - alpha))``;
* :func:`frac_power` wraps it as ``(A + 1)**n J (A + 1)**-n``;
* :func:`frac_power_spectral` applies the multiplier ``y**(2 alpha)`` between
  two Hankel transforms.

The bracket ``[A (lam + A)**-1]**m f`` is computed as ``R_lam**m (A**m f)``
with one convolution against the iterated resolvent kernel.  This is
algebraically the same as m-fold ``f - lam R_lam f`` but avoids the
cancellation that form suffers at large ``lam``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .besselop import apply_s, apply_s_power
from .errors import ClassCheckWarning, DomainError
from .corpus import as_gauss_poly
from .funcspace import (
    DEFAULT_SPEC,
    HalfLineFunction,
    OperatorImage,
    check_order,
    estimate_decay,
    lincomb,
    materialize,
    power,
    product,
)
from .hankel import hankel_transform
from .hconv import angular_constant, translation
from .quadrature import adaptive_gk, panel_rule
from .resolvent import _kernel_values, check_lambda, resolvent_apply
from .specfun import gamma_complex

__all__ = [
    "Alpha",
    "balakrishnan",
    "balakrishnan_sine",
    "bracket",
    "frac_power",
    "frac_power_spectral",
    "frac_power_delta",
]

LOG_LAMBDA_SPAN = 30.0
_X_CHUNK = 64


@dataclass(frozen=True)
class Alpha:
    """Fractional exponent with ``Re alpha > 0`` and integer order ``m > Re alpha``.

    ``m`` defaults to ``floor(Re alpha) + 1``.
    """

    alpha: complex
    m: Optional[int] = None

    def __post_init__(self):
        a = complex(self.alpha)
        if not a.real > 0:
            raise DomainError("Re(alpha) must be positive")
        m = int(math.floor(a.real)) + 1 if self.m is None else int(self.m)
        if m <= a.real or m < 1:
            raise DomainError("m must exceed Re(alpha)")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "m", m)

    @property
    def is_real(self):
        return self.alpha.imag == 0.0

    def value(self):
        return self.alpha.real if self.is_real else self.alpha


def _as_alpha(a):
    return a if isinstance(a, Alpha) else Alpha(a)


def balakrishnan_constant(a):
    """``Gamma(m) / (Gamma(alpha) Gamma(m - alpha))``."""
    a = _as_alpha(a)
    val = complex(gamma_complex(a.m) / (gamma_complex(a.alpha) * gamma_complex(a.m - a.alpha)))
    return val.real if a.is_real else val


def _y_panels(lo, hi, ratio=1.25, width=0.5):
    knee = min(1.0, hi)
    n = max(2, int(np.ceil(np.log(knee / lo) / np.log(ratio))) + 1)
    parts = [np.geomspace(lo, knee, n)]
    if hi > knee:
        parts.append(np.linspace(knee, hi, int(np.ceil((hi - knee) / width)) + 1))
    return np.unique(np.concatenate(parts))


def _translation_table(mu, g, x, y, reach, rel_tol):
    rows = []
    for s in range(0, len(x), _X_CHUNK):
        rows.append(translation(mu, g, x[s:s + _X_CHUNK], y, reach=reach, rel_tol=rel_tol))
    return np.concatenate(rows, axis=0)


def _bracket_integral(mu, a, prefactor, f, g, x, spec):
    """Balakrishnan integral of ``f`` given ``g = A**m f`` at abscissae ``x``.

    The outer variable of the convolution is discretized once on a graded
    panel set, the translation table ``tau(x_i, y_j)`` is computed once,
    and each ``lam`` sample then costs one kernel evaluation and a weighted
    sum.  The ``lam`` integral runs over ``log lam`` in ``[-U, U]``; the two
    tails use the limits ``R**m A**m f -> f`` and ``-> lam**-m A**m f``.
    """
    m = a.m
    alpha = a.alpha
    ap = mu + 0.5
    c = angular_constant(mu)
    inner = materialize(g, mu) if (g.order == 0 and g.kind != "grid") else g
    reach = min(inner.decay_hint or spec.x_max, spec.x_max)
    x = np.asarray(x, dtype=float)
    y_lo = 1e-2 * spec.x_min
    y_hi = min(float(x.max()) + reach, 2 * spec.x_max)
    bp = _y_panels(y_lo, y_hi)
    tol_y = max(spec.rel_tol, 1e-9)
    cache = {}
    for _ in range(4):
        nodes, wk, wg = panel_rule(bp[:-1], bp[1:])
        y = nodes.ravel()
        # refinement only bisects panels, so columns of kept panels are reused
        fresh = [i for i, key in enumerate(zip(bp[:-1], bp[1:])) if key not in cache]
        if fresh:
            block = _translation_table(mu, inner, x, nodes[fresh].ravel(), reach, tol_y)
            for j, i in enumerate(fresh):
                cache[(bp[i], bp[i + 1])] = block[:, 15 * j:15 * (j + 1)]
        table = np.concatenate([cache[key] for key in zip(bp[:-1], bp[1:])], axis=1)
        yk = (wk.ravel() * y ** ap)
        yg = (wg.ravel() * y ** ap)
        worst = {"ratio": 0.0, "lam": None}

        def integrand(u):
            lam = np.exp(u)
            kern = _kernel_values(mu, lam[:, None], y[None, :], m)
            vk = np.einsum("ij,kj->ki", table, kern * yk)
            vg = np.einsum("ij,kj->ki", table, kern * yg)
            err = np.abs(vk - vg)
            scale = np.max(np.abs(vk), axis=1, keepdims=True) + spec.abs_tol
            r = np.max(err / scale, axis=1)
            i = int(np.argmax(r))
            if r[i] > worst["ratio"]:
                worst["ratio"] = float(r[i])
                worst["lam"] = float(lam[i])
            weight = np.exp(alpha * u) if not a.is_real else np.exp(alpha.real * u)
            # the x**ap factor is applied afterwards so the shared tolerance
            # is measured in the r-weighted sup norm
            return c * weight[:, None] * vk

        u_bp = np.linspace(-LOG_LAMBDA_SPAN, LOG_LAMBDA_SPAN, 13)
        val, _ = adaptive_gk(integrand, u_bp, spec.rel_tol, spec.abs_tol, spec.max_subdivisions,
                             shared_scale=True)
        val = val * x ** ap
        if worst["ratio"] <= tol_y:
            break
        bp = _refine_panels(mu, m, bp, table, wk, wg, y, worst["lam"], tol_y)
    lam_lo = math.exp(-LOG_LAMBDA_SPAN)
    lam_hi = math.exp(LOG_LAMBDA_SPAN)
    lower = f(x) * lam_lo ** alpha / alpha
    upper = g(x) * lam_hi ** (alpha - m) / (m - alpha)
    out = prefactor * (val + lower + upper)
    if a.is_real and not np.iscomplexobj(f(x[:1])):
        out = np.real(out)
    return out


def _refine_panels(mu, m, bp, table, wk, wg, y, lam, tol):
    """Bisect the outer panels that dominate the error at the worst ``lam``."""
    ap = mu + 0.5
    kern = _kernel_values(mu, lam, y, m) * y ** ap
    diff = (wk - wg).ravel() * kern
    per = np.abs(table * diff).reshape(table.shape[0], -1, 15).sum(axis=2).max(axis=0)
    total = np.abs(table @ (wk.ravel() * kern)).max() + 1e-300
    bad = per > 0.1 * tol * total
    if not bad.any():
        bad = per >= per.max()
    mids = 0.5 * (bp[:-1] + bp[1:])[bad]
    return np.unique(np.concatenate([bp, mids]))


def _balakrishnan(mu, a, f, spec, prefactor, label):
    f = as_gauss_poly(mu, f)
    g = apply_s_power(mu, f, a.m)
    if a.m % 2:
        g = lincomb([(-1.0, g)])

    def ev(x):
        x = np.asarray(x, dtype=float)
        flat = x.ravel()
        return _bracket_integral(mu, a, prefactor, f, g, flat, spec).reshape(x.shape)

    out = HalfLineFunction(ev, label=label)
    out._decay = lambda: estimate_decay(out, spec)
    out.image = OperatorImage(("balakrishnan", mu, a, prefactor, spec), f,
                              lambda h: _balakrishnan(mu, a, h, spec, prefactor,
                                                      f"J[{a.value()}]({h.label})"))
    return out


def balakrishnan(mu, a, f, spec=DEFAULT_SPEC):
    """Fractional power ``(-S_mu)**alpha f`` by the Balakrishnan integral.

    Parameters
    ----------
    mu : float
    a : Alpha or complex
        Exponent; a bare number gets the smallest admissible ``m``.
    f : HalfLineFunction
        Must admit ``m`` applications of ``S_mu`` (analytic with enough
        derivatives, or a lazy result whose operand does).
    spec : QuadratureSpec

    Returns
    -------
    HalfLineFunction
        Lazily evaluated, complex-valued when ``alpha`` is complex.
    """
    mu = check_order(mu)
    a = _as_alpha(a)
    return _balakrishnan(mu, a, f, spec, balakrishnan_constant(a),
                         f"J[{a.value()}]({f.label})")


def balakrishnan_sine(mu, alpha, f, spec=DEFAULT_SPEC):
    """The ``m = 1`` form with prefactor ``sin(alpha pi) / pi``, real ``0 < alpha < 1``."""
    mu = check_order(mu)
    alpha = float(alpha)
    if not 0 < alpha < 1:
        raise DomainError("the sine form needs 0 < alpha < 1")
    a = Alpha(alpha, 1)
    return _balakrishnan(mu, a, f, spec, math.sin(alpha * math.pi) / math.pi,
                         f"Jsin[{alpha}]({f.label})")


def bracket(mu, lam, f, m=1, spec=DEFAULT_SPEC, form="kernel"):
    """``[(-S_mu)(lam - S_mu)**-1]**m f``.

    ``form="kernel"`` returns ``R_lam**m ((-S_mu)**m f)``; ``form="difference"``
    iterates ``g -> g - lam R_lam g``.
    """
    mu = check_order(mu)
    lam = check_lambda(lam)
    if form == "kernel":
        g = apply_s_power(mu, f, m)
        if m % 2:
            g = lincomb([(-1.0, g)])
        return resolvent_apply(mu, lam, g, spec, power=m)
    if form == "difference":
        g = f
        for _ in range(m):
            r = resolvent_apply(mu, lam, g, spec)
            g = _difference(g, r, lam)
        return g
    raise DomainError(f"unknown bracket form {form!r}")


def _difference(g, r, lam):
    # g - lam R g without collapsing the two terms into one operator image
    def ev(x):
        return g(x) - lam * r(x)

    hint = None if g.decay_hint is None or r.decay_hint is None else max(g.decay_hint, r.decay_hint)
    return HalfLineFunction(ev, decay_hint=hint, label=f"({g.label})-{lam:g}R")


def frac_power(mu, a, f, spec=DEFAULT_SPEC):
    """``(A + 1)**n J^alpha (A + 1)**-n f`` with ``A = -S_mu`` and ``n = a.m``.

    The inverse is an n-fold resolvent at ``lam = 1``; the outer power is
    n-fold ``g -> g - S_mu g``, which acts on the lazy result through the
    operators that commute with ``S_mu``.
    """
    mu = check_order(mu)
    a = _as_alpha(a)
    n = a.m
    f = as_gauss_poly(mu, f)
    g = resolvent_apply(mu, 1.0, f, spec, power=n)
    out = balakrishnan(mu, a, g, spec)
    for _ in range(n):
        out = lincomb([(1.0, out), (-1.0, apply_s(mu, out))])
    out.label = f"P[{a.value()}]({f.label})"
    return out


def _multiplier(a):
    alpha = a.alpha

    def ev(y):
        if a.is_real:
            return y ** (2.0 * alpha.real)
        return np.exp(2.0 * alpha * np.log(y))

    return HalfLineFunction(ev, label=f"y^(2*{a.value()})")


def frac_power_spectral(mu, a, f, spec=DEFAULT_SPEC):
    """Spectral route ``h(y**(2 alpha) h f)``, principal branch for complex ``alpha``.

    When ``f`` is itself a spectral result its transform is reused, so
    compositions multiply the multipliers exactly.
    """
    mu = check_order(mu)
    a = _as_alpha(a)
    if f.spectrum is not None and f.spectrum[0] == mu:
        hf = f.spectrum[1]
    else:
        hf = hankel_transform(mu, f, spec)
    inner = product(hf, _multiplier(a))
    hi = min(spec.x_max, hf.decay_hint or spec.x_max)
    # mass lost left of x_min is about x_min |inner(x_min)|
    ends = np.abs(inner(np.array([spec.x_min, hi]))) * np.array([spec.x_min, 1.0])
    peak = np.max(np.abs(inner(np.geomspace(0.1, 5, 16))))
    if np.any(ends > 1e-6 * max(peak, 1e-300)):
        warnings.warn("spectral integrand is not small at the truncation window edges",
                      ClassCheckWarning, stacklevel=2)
    out = hankel_transform(mu, inner, spec)
    out.spectrum = (mu, inner)
    out.label = f"Pspec[{a.value()}]({f.label})"
    return out


def frac_power_delta(mu, a, f, spec=DEFAULT_SPEC):
    """Fractional power of ``-Delta_mu`` by similarity with ``-S_mu``.

    Returns ``x**(-mu-1/2) frac_power(x**(mu+1/2) f)``.
    """
    mu = check_order(mu)
    a = _as_alpha(a)
    b = mu + 0.5
    inner = frac_power(mu, a, product(power(b), f), spec)
    out = product(power(-b), inner)
    out.label = f"Pdelta[{a.value()}]({f.label})"
    return out
