"""Hankel transform with kernel sqrt(xy) J_mu(xy) and the Parseval pairing."""

from __future__ import annotations

import numpy as np

from .errors import OscillationError
from .funcspace import (
    DEFAULT_SPEC,
    HalfLineFunction,
    check_order,
    estimate_decay,
    integrate,
    power,
    product,
)
from .quadrature import adaptive_gk
from .specfun import bessel_j_scaled

__all__ = ["hankel_transform", "pairing", "transform_breakpoints", "MATERIALIZE_GRID"]

# default abscissae for writing out transforms
MATERIALIZE_GRID = np.geomspace(1e-3, 30.0, 256)

_CHUNK = 128


def transform_breakpoints(y_lo, y_hi, x_max, spec=DEFAULT_SPEC):
    """Panels for the y-integral at output points up to ``x_max``.

    Geometric panels resolve the origin; beyond ``y = 1`` panels are at most
    half an oscillation period ``pi / x_max`` wide.

    Raises
    ------
    OscillationError
        If the panel count exceeds ``spec.max_subdivisions``.
    """
    knee = min(1.0, y_hi)
    n_geo = max(2, int(np.ceil(np.log10(knee / y_lo) * 1.5)) + 1)
    head = np.geomspace(y_lo, knee, n_geo)
    if y_hi <= knee:
        return head
    width = min(1.0, np.pi / max(x_max, 1e-300))
    n = int(np.ceil((y_hi - knee) / width))
    if n + n_geo > spec.max_subdivisions:
        raise OscillationError(
            f"transform at x = {x_max:.4g} needs {n + n_geo} panels "
            f"(budget {spec.max_subdivisions})"
        )
    tail = np.linspace(knee, y_hi, n + 1)
    return np.concatenate([head, tail[1:]])


def _transform_values(mu, f, x, spec):
    """Evaluate the transform of ``f`` at the points ``x`` (any shape)."""
    a = mu + 0.5
    x = np.asarray(x, dtype=float)
    flat = x.ravel()
    y_hi = spec.x_max if f.decay_hint is None else min(spec.x_max, f.decay_hint)
    y_lo = spec.x_min * min(1.0, f.scale)
    out = None
    order = np.argsort(flat, kind="stable")
    for start in range(0, len(flat), _CHUNK):
        idx = order[start:start + _CHUNK]
        xc = flat[idx]
        bp = transform_breakpoints(y_lo, y_hi, float(xc.max()), spec)
        xa = xc ** a

        def integrand(y, xc=xc, xa=xa):
            fy = f(y) * y ** a
            return fy[:, None] * bessel_j_scaled(mu, np.multiply.outer(y, xc)) * xa

        val, _ = adaptive_gk(integrand, bp, spec.rel_tol, spec.abs_tol,
                             spec.max_subdivisions)
        if out is None:
            out = np.empty(flat.shape, dtype=val.dtype)
        out[idx] = val
    if out is None:
        out = np.empty(flat.shape)
    return out.reshape(x.shape)


def hankel_transform(mu, f, spec=DEFAULT_SPEC):
    """Hankel transform ``x -> int_0^inf sqrt(xy) J_mu(xy) f(y) dy``.

    Parameters
    ----------
    mu : float
        Order, ``mu > -1/2``.
    f : HalfLineFunction
        Input; its ``decay_hint`` truncates the integral.
    spec : QuadratureSpec

    Returns
    -------
    HalfLineFunction
        Lazily evaluated transform.  The kernel is evaluated as
        ``(xy)**(mu+1/2) * [(xy)**-mu J_mu(xy)]`` so small ``xy`` stays finite.
        The result knows that ``S_mu`` acting on it equals the transform of
        ``-y**2 f``.
    """
    mu = check_order(mu)

    def ev(x):
        return _transform_values(mu, f, x, spec)

    out = HalfLineFunction(ev, label=f"h[{f.label}]")

    def s_image(mu2):
        if mu2 != mu:
            return None
        return hankel_transform(mu, product(power(2.0, -1.0), f), spec)

    out.s_image = s_image
    out._decay = lambda: estimate_decay(out, spec)
    return out


def pairing(f, g, spec=DEFAULT_SPEC):
    """``int_0^inf f g dx`` over the truncation window."""
    val, _ = integrate(product(f, g), spec)
    return val


def _alt_transform(mu, phi, spec=DEFAULT_SPEC):
    """Transform with kernel ``(xy)**-mu J_mu(xy)`` against ``y**(2mu+1) dy``.

    Related to the main transform by ``h(f) = r**-1 H(r f)``; kept for tests.
    """
    mu = check_order(mu)
    b = 2.0 * mu + 1.0

    def ev(x):
        x = np.asarray(x, dtype=float)
        flat = x.ravel()
        hi = spec.x_max if phi.decay_hint is None else min(spec.x_max, phi.decay_hint)
        bp = transform_breakpoints(spec.x_min, hi, float(flat.max()), spec)

        def integrand(y):
            return (phi(y) * y ** b)[:, None] * bessel_j_scaled(mu, np.multiply.outer(y, flat))

        val, _ = adaptive_gk(integrand, bp, spec.rel_tol, spec.abs_tol, spec.max_subdivisions)
        return val.reshape(x.shape)

    return HalfLineFunction(ev, label=f"H[{phi.label}]")
