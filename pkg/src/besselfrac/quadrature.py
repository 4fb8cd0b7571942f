"""Vectorized adaptive Gauss-Kronrod (G7/K15) panel quadrature.

The integrand is called once per refinement sweep with every new node, and
may return a batch of values per node (shape ``(n,) + batch``), so many
related integrals (e.g. a transform at many output points) share one panel
set.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError

__all__ = ["GK_NODES", "GK_WEIGHTS", "G_WEIGHTS", "adaptive_gk", "fixed_gk", "panel_rule"]

# Kronrod abscissae on [0, 1) (the symmetric half) and weights, QUADPACK qk15.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full 15-point layout on [-1, 1]
GK_NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[-2::-1]])
GK_WEIGHTS = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[-2::-1]])
G_WEIGHTS = np.zeros(15)
# Gauss nodes are the odd-indexed Kronrod nodes (+-xgk[1], +-xgk[3], +-xgk[5], 0)
G_WEIGHTS[[1, 3, 5]] = _WG[:3]
G_WEIGHTS[7] = _WG[3]
G_WEIGHTS[[13, 11, 9]] = _WG[:3]

_EPS = np.finfo(float).eps


def panel_rule(a, b):
    """Nodes and weights of the K15 and G7 rules on each panel ``[a_i, b_i]``.

    Returns
    -------
    nodes : ndarray, shape (P, 15)
    wk, wg : ndarray, shape (P, 15)
        Kronrod and embedded Gauss weights scaled to the panels.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    nodes = mid[:, None] + half[:, None] * GK_NODES
    return nodes, half[:, None] * GK_WEIGHTS, half[:, None] * G_WEIGHTS


def _contract(weights, values):
    # deterministic weighted sum over the node axis (no BLAS)
    return np.sum(weights.reshape(weights.shape + (1,) * (values.ndim - 2)) * values, axis=1)


def _evaluate(func, a, b):
    nodes, wk, wg = panel_rule(a, b)
    vals = np.asarray(func(nodes.ravel()))
    vals = vals.reshape((len(a), 15) + vals.shape[1:])
    k = _contract(wk, vals)
    g = _contract(wg, vals)
    kabs = _contract(wk, np.abs(vals))
    return k, np.abs(k - g), kabs


def fixed_gk(func, breakpoints):
    """Non-adaptive K15 sum over the panels defined by ``breakpoints``.

    Returns ``(value, error_estimate)`` with the summed ``|K15 - G7|``.
    """
    bp = np.asarray(breakpoints, dtype=float)
    k, err, _ = _evaluate(func, bp[:-1], bp[1:])
    return k.sum(axis=0), err.sum(axis=0)


def adaptive_gk(func, breakpoints, rel_tol=1e-9, abs_tol=1e-13, max_panels=2000,
                return_panels=False, shared_scale=False):
    """Adaptive G7/K15 quadrature of a (possibly batch-valued) integrand.

    Parameters
    ----------
    func : callable
        Maps a 1-D array of nodes to values of shape ``(n,) + batch``.
    breakpoints : array_like
        Initial increasing panel boundaries.
    rel_tol, abs_tol : float
        Each batch component stops refining once its summed error estimate
        is below ``max(abs_tol, rel_tol * |I|)``.
    max_panels : int
        Total panel budget; exceeding it raises ``ConvergenceError``.
    return_panels : bool
        Also return the final sorted panel boundaries.
    shared_scale : bool
        Measure the relative tolerance against the largest ``|I|`` in the
        batch instead of each component's own value, for batches that are
        samples of one function that may cross zero.

    Returns
    -------
    value, error : ndarray or complex
        Integral and error estimate, each of shape ``batch``.
    """
    bp = np.asarray(breakpoints, dtype=float)
    if bp.ndim != 1 or len(bp) < 2 or np.any(np.diff(bp) <= 0):
        raise ValueError("breakpoints must be strictly increasing with at least 2 entries")
    a, b = bp[:-1].copy(), bp[1:].copy()
    k, err, kabs = _evaluate(func, a, b)

    while True:
        total = k.sum(axis=0)
        total_err = err.sum(axis=0)
        floor = 50.0 * _EPS * kabs.sum(axis=0)
        mag = np.abs(total)
        if shared_scale and mag.ndim:
            mag = np.full(mag.shape, mag.max())
        tol = np.maximum(np.maximum(abs_tol, rel_tol * mag), floor)
        if np.all(total_err <= tol):
            break
        # normalized panel error: worst over still-unconverged components
        bad = total_err > tol
        scaled = err[:, bad] / tol[bad] if err.ndim > 1 else err / tol
        score = scaled.max(axis=1) if scaled.ndim > 1 else scaled
        # panels too narrow to split are left alone
        splittable = (b - a) > 8 * _EPS * np.maximum(np.abs(a), np.abs(b))
        score = np.where(splittable, score, 0.0)
        if not np.any(score > 0):
            break
        order = np.argsort(-score, kind="stable")
        csum = np.cumsum(score[order])
        n_split = int(np.searchsorted(csum, 0.5 * csum[-1]) + 1)
        chosen = order[:n_split]
        chosen = chosen[score[chosen] > 0]
        if len(a) + len(chosen) > max_panels:
            raise ConvergenceError(
                f"adaptive quadrature exhausted {max_panels} panels "
                f"(error {np.max(total_err):.3g} > tolerance {np.min(tol):.3g})"
            )
        mid = 0.5 * (a[chosen] + b[chosen])
        na = np.concatenate([a[chosen], mid])
        nb = np.concatenate([mid, b[chosen]])
        nk, nerr, nkabs = _evaluate(func, na, nb)
        keep = np.ones(len(a), dtype=bool)
        keep[chosen] = False
        a = np.concatenate([a[keep], na])
        b = np.concatenate([b[keep], nb])
        k = np.concatenate([k[keep], nk])
        err = np.concatenate([err[keep], nerr])
        kabs = np.concatenate([kabs[keep], nkabs])

    # sum in left-to-right panel order so results do not depend on split history
    order = np.argsort(a, kind="stable")
    value = k[order].sum(axis=0)
    error = err.sum(axis=0)
    if return_panels:
        return value, error, np.append(a[order], b[order][-1])
    return value, error
