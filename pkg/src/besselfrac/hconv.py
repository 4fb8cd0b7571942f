"""Hankel convolution, its triangle kernel and an approximate identity.

The convolution is evaluated in the angular form

    (f # g)(x) = c x**a int f(y) y**a tau(x, y) dy,
    tau(x, y) = int_{-1}^{1} (r g)(T) (1 - u**2)**(mu - 1/2) du,

with ``a = mu + 1/2``, ``T**2 = x**2 + y**2 - 2xyu`` and
``c = 1 / (2**mu Gamma(mu + 1/2) sqrt(pi))``.  The u-integral is done with
Gauss-Jacobi rules that absorb the endpoint weight, so orders below 1/2
need no special treatment.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

from .errors import ConvergenceError, DomainError
from .funcspace import (
    DEFAULT_SPEC,
    HalfLineFunction,
    OperatorImage,
    check_l1_sr,
    check_order,
    gaussian,
    materialize,
    power,
    product,
)
from .quadrature import adaptive_gk
from .specfun import gamma_fn

__all__ = [
    "kernel_D",
    "convolve",
    "approx_identity_member",
    "translation",
    "angular_constant",
    "y_breakpoints",
]

_CHUNK = 48
_MAX_NODES = 1024
# spline inputs have jumps in the third derivative at their knots, so the
# angular rule converges only algebraically; at the node cap they are
# accepted at interpolation accuracy instead
_GRID_REL_TOL = 1e-7


def angular_constant(mu):
    """``1 / (2**mu Gamma(mu + 1/2) sqrt(pi))``."""
    return 1.0 / (2.0 ** mu * gamma_fn(mu + 0.5) * math.sqrt(math.pi))


def kernel_D(mu, x, y, z):
    """Triangle kernel of the Hankel convolution.

    Nonzero only when ``|x - y| < z < x + y``, where it equals
    ``2**(mu-1) (xyz)**(1/2-mu) A**(2mu-1) / (Gamma(mu+1/2) sqrt(pi))`` with
    ``A`` the area of the triangle with sides ``x, y, z``.
    """
    mu = check_order(mu)
    x, y, z = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (x, y, z)))
    if np.any(~(x > 0)) or np.any(~(y > 0)) or np.any(~(z > 0)):
        raise DomainError("kernel_D needs positive arguments")
    inside = (np.abs(x - y) < z) & (z < x + y)
    sq = ((x + y) ** 2 - z ** 2) * (z ** 2 - (x - y) ** 2)
    area = 0.25 * np.sqrt(np.where(inside, sq, 1.0))
    val = (2.0 ** (mu - 1.0) * (x * y * z) ** (0.5 - mu) * area ** (2.0 * mu - 1.0)
           / (gamma_fn(mu + 0.5) * math.sqrt(math.pi)))
    out = np.where(inside, val, 0.0)
    return float(out) if out.ndim == 0 else out


@lru_cache(maxsize=None)
def _jacobi(n, alpha, beta):
    x, w = roots_jacobi(n, alpha, beta)
    return x, w


def _inner_rg(g, mu):
    """Evaluator of ``r g`` as a function of ``t**2``, used inside the translation integral."""
    if getattr(g, "r_sq_evaluator", None) is not None and g.r_mu == mu:
        return g.r_sq_evaluator
    rg = _inner_rg_t(g, mu)
    return lambda t2: rg(np.sqrt(t2))


def _inner_rg_t(g, mu):
    wq = getattr(g, "weighted_q", None)
    if wq is not None:
        xs, q, spline = wq
        lo, hi = xs[0], xs[-1]

        def rg(t):
            out = np.zeros(t.shape, dtype=q.dtype)
            inside = (t >= lo) & (t <= hi)
            out[inside] = spline(t[inside])
            out[t < lo] = q[0]
            return out

        return rg
    direct = getattr(g, "r_evaluator", None)
    if direct is not None and g.r_mu == mu:
        return direct
    a = mu + 0.5
    return lambda t: g(t) * t ** (-a)


def _tau_rule(mu, rg, x, y, a_gap, p, delta, full, n):
    """Translation integral for the listed pairs with an n-point rule."""
    e = mu - 0.5
    if full:
        u, w = _jacobi(n, e, e)
        t2 = (x * x + y * y)[:, None] - p[:, None] * u
        vals = rg(np.maximum(t2, 0.0))
        return np.sum(vals * w, axis=1)
    v, w = _jacobi(n, e, 0.0)
    one_minus_u = delta[:, None] * (1.0 - v) * 0.5
    t2 = a_gap[:, None] ** 2 + p[:, None] * one_minus_u
    fac = (2.0 - one_minus_u) ** e
    vals = rg(t2) * fac
    return (0.5 * delta) ** (mu + 0.5) * np.sum(vals * w, axis=1)


def translation(mu, g, x, y, *, reach=None, rel_tol=1e-11):
    """Unnormalized translation integral ``tau(x_i, y_j)``.

    Parameters
    ----------
    mu : float
    g : HalfLineFunction
        Inner function; evaluated only through ``r g``.
    x, y : 1-D arrays
    reach : float, optional
        Support length of ``g`` (defaults to its decay hint).

    Returns
    -------
    ndarray, shape (len(x), len(y))
    """
    rg = _inner_rg(g, mu)
    reach = reach if reach is not None else (g.decay_hint or DEFAULT_SPEC.x_max)
    X, Y = np.meshgrid(np.asarray(x, float), np.asarray(y, float), indexing="ij")
    xf, yf = X.ravel(), Y.ravel()
    gap = np.abs(xf - yf)
    p = 2.0 * xf * yf
    live = np.nonzero(gap < reach)[0]
    with np.errstate(divide="ignore"):
        delta_all = (2.0 * gap * reach + reach * reach) / p
    result = np.zeros(xf.shape, dtype=complex)
    is_real = True
    for full in (True, False):
        sel = live[(delta_all[live] >= 1.0) == full]
        if len(sel) == 0:
            continue
        n = 8
        prev = _tau_rule(mu, rg, xf[sel], yf[sel], gap[sel], p[sel], delta_all[sel], full, n)
        pending = sel
        while len(pending):
            n *= 2
            cur = _tau_rule(mu, rg, xf[pending], yf[pending], gap[pending], p[pending],
                            delta_all[pending], full, n)
            scale = max(np.max(np.abs(cur)), 1e-300)
            ok = np.abs(cur - prev) <= rel_tol * scale
            result[pending[ok]] = cur[ok]
            if np.iscomplexobj(cur):
                is_real = False
            if n >= _MAX_NODES and not ok.all():
                loose = np.abs(cur - prev) <= _GRID_REL_TOL * scale
                if g.kind != "grid" or not loose.all():
                    raise ConvergenceError("translation integral did not converge")
                result[pending] = cur
                break
            pending, prev = pending[~ok], cur[~ok]
    out = result.reshape(X.shape)
    return out.real if is_real else out


def y_breakpoints(lo, hi, scale=1.0, width=0.5):
    """Outer-integral panels: geometric near the origin, then uniform."""
    knee = min(1.0, hi)
    geo = np.geomspace(lo, knee, max(2, int(np.ceil(np.log10(knee / lo) * 2)) + 1))
    parts = [geo]
    if scale < 1.0:
        parts.append(np.geomspace(max(lo, 0.02 * scale), knee, 16))
    if hi > knee:
        parts.append(np.linspace(knee, hi, int(np.ceil((hi - knee) / width)) + 1))
    bp = np.unique(np.concatenate(parts))
    return bp[(bp >= lo) & (bp <= hi)]


def _is_r_singular(f):
    return bool(getattr(f, "r_singular", False))


def _convolution_values(mu, outer, inner, x, spec):
    a = mu + 0.5
    c = angular_constant(mu)
    x = np.asarray(x, dtype=float)
    flat = x.ravel()
    reach = min(inner.decay_hint or spec.x_max, spec.x_max)
    f_end = min(outer.decay_hint or spec.x_max, spec.x_max)
    lo = spec.x_min * min(1.0, outer.scale)
    out = np.zeros(flat.shape, dtype=complex)
    is_real = True
    order = np.argsort(flat, kind="stable")
    for start in range(0, len(flat), _CHUNK):
        idx = order[start:start + _CHUNK]
        xc = flat[idx]
        y_lo = max(lo, float(xc.min()) - reach)
        y_hi = min(f_end, float(xc.max()) + reach)
        if y_hi <= y_lo:
            continue
        bp = y_breakpoints(y_lo, y_hi, outer.scale)

        def integrand(y, xc=xc):
            tau = translation(mu, inner, xc, y, reach=reach, rel_tol=spec.rel_tol)
            return (outer(y) * y ** a)[:, None] * tau.T

        val, _ = adaptive_gk(integrand, bp, spec.rel_tol, spec.abs_tol, spec.max_subdivisions)
        if np.iscomplexobj(val):
            is_real = False
        out[idx] = c * xc ** a * val
    out = out.reshape(x.shape)
    return out.real if is_real else out


def convolve(mu, f, g, spec=DEFAULT_SPEC, *, check=False):
    """Hankel convolution ``f # g`` as a lazily evaluated function.

    Parameters
    ----------
    mu : float
    f, g : HalfLineFunction
        ``f`` should be integrable against ``s r``; ``g`` may be bounded in
        the ``r`` weight or ``p``-integrable.
    spec : QuadratureSpec
    check : bool
        Emit a ``ClassCheckWarning`` if ``f`` fails a numerical L1(sr) test.

    Notes
    -----
    The function that is singular after weighting by ``r`` (such as the
    resolvent kernel) is integrated in the outer variable; the other one is
    evaluated inside the translation integral.  Lazy inner functions are
    sampled once on a dense grid.  ``S_mu`` applied to the result is
    computed as ``f # S_mu g``.
    """
    mu = check_order(mu)
    if check:
        check_l1_sr(f, mu, spec)
    outer, inner = f, g
    if _is_r_singular(inner) or (inner.order == 0 and inner.kind != "grid"
                                 and outer.order > 0 and not _is_r_singular(outer)):
        outer, inner = inner, outer
    inner_eval = materialize(inner, mu) if (inner.order == 0 and inner.kind != "grid") else inner

    def ev(x):
        return _convolution_values(mu, outer, inner_eval, x, spec)

    hint_f, hint_g = f.decay_hint, g.decay_hint
    hint = None if hint_f is None or hint_g is None else min(spec.x_max, hint_f + hint_g)
    image = OperatorImage(("conv", mu, id(f), spec), g, lambda h: convolve(mu, f, h, spec))
    return HalfLineFunction(ev, decay_hint=hint, image=image,
                            label=f"({f.label})#({g.label})")


def approx_identity_member(mu, n):
    """``n**(2mu+2) x**(mu+1/2) exp(-n**2 x**2 / 2)``, unit mass against ``r s``."""
    mu = check_order(mu)
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    n = int(n)
    f = product(power(mu + 0.5, float(n) ** (2 * mu + 2)), gaussian(0.5 * n * n))
    f.label = f"phi_{n}"
    f._decay = 9.8 / n
    f.scale = 1.0 / n
    return f
