"""Functions on the half line, weights, weighted norms and seminorms.

A :class:`HalfLineFunction` is either *analytic* (a callable, optionally with
a derivative jet) or *grid* (samples with cubic interpolation).  Results of
integral operators are analytic-kind functions without derivatives that
evaluate lazily; they may carry metadata describing how the operator that
produced them acts, which lets differential operators commute through them.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import (
    ClassCheckWarning,
    ConvergenceError,
    DecayWarning,
    DomainError,
    InsufficientDerivativesError,
)
from .quadrature import adaptive_gk
from .specfun import gamma_fn

__all__ = [
    "QuadratureSpec",
    "DEFAULT_SPEC",
    "NormKind",
    "OperatorImage",
    "HalfLineFunction",
    "check_order",
    "c_mu",
    "weight_r",
    "weight_s",
    "power",
    "gaussian",
    "exponential",
    "cosine",
    "sine",
    "constant",
    "zero",
    "product",
    "lincomb",
    "dilate",
    "from_callable",
    "from_samples",
    "materialize",
    "materialize_grid",
    "integration_breakpoints",
    "integrate",
    "norm",
    "sup_grid",
    "seminorm_gamma",
    "seminorm_rho",
    "estimate_decay",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and truncation window shared by every integral.

    Attributes
    ----------
    rel_tol, abs_tol : float
        Relative and absolute targets for adaptive quadrature.
    x_min, x_max : float
        Truncation window ``(x_min, x_max)`` of the half line.
    max_subdivisions : int
        Panel budget for a single adaptive integral.
    """

    rel_tol: float = 1e-9
    abs_tol: float = 1e-13
    x_min: float = 1e-8
    x_max: float = 60.0
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerances must be positive")
        if not (0 < self.x_min < self.x_max):
            raise DomainError("need 0 < x_min < x_max")
        if int(self.max_subdivisions) < 1:
            raise DomainError("max_subdivisions must be positive")

    def with_(self, **kw):
        return replace(self, **kw)


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class NormKind:
    """Selector among the weighted norms.

    ``tag`` is one of ``"Lp_srp"``, ``"Linf_r"``, ``"L1_sr"``, ``"Y"``.
    """

    tag: str
    p: float = 1.0

    def __post_init__(self):
        if self.tag not in ("Lp_srp", "Linf_r", "L1_sr", "Y"):
            raise DomainError(f"unknown norm tag {self.tag!r}")
        if self.tag == "Lp_srp" and not self.p >= 1:
            raise DomainError("p must be >= 1")

    @classmethod
    def lp(cls, p):
        if math.isinf(p):
            return cls("Linf_r")
        return cls("Lp_srp", float(p))


NormKind.LINF_R = NormKind("Linf_r")
NormKind.L1_SR = NormKind("L1_sr")
NormKind.Y = NormKind("Y")


@dataclass(frozen=True)
class OperatorImage:
    """Records ``f = apply(source)`` for a linear operator commuting with S_mu.

    ``key`` identifies the operator; functions sharing a key can be combined
    before the operator is applied.
    """

    key: tuple
    source: "HalfLineFunction"
    apply: Callable[["HalfLineFunction"], "HalfLineFunction"]


def check_order(mu):
    mu = float(mu)
    if not mu > -0.5:
        raise DomainError("the order mu must exceed -1/2")
    return mu


def _positive(x):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("argument must be positive")
    return x


def c_mu(mu):
    """Normalizing constant ``2**mu * Gamma(mu + 1)``."""
    mu = check_order(mu)
    return 2.0 ** mu * gamma_fn(mu + 1.0)


def weight_r(mu, x):
    """Weight ``r(x) = x**(-mu - 1/2)``."""
    mu = check_order(mu)
    return _positive(x) ** (-mu - 0.5)


def weight_s(mu, x):
    """Weight ``s(x) = x**(2 mu + 1) / c_mu``."""
    mu = check_order(mu)
    return _positive(x) ** (2.0 * mu + 1.0) / c_mu(mu)


# ------------------------------------------------------------------ jets

def leibniz(ja, jb, n):
    """Jet of a product from the jets of its factors (orders 0..n)."""
    out = []
    for k in range(n + 1):
        acc = 0
        for i in range(k + 1):
            acc = acc + math.comb(k, i) * ja[i] * jb[k - i]
        out.append(acc)
    return np.array(out)


class HalfLineFunction:
    """A complex-valued function on ``(0, inf)``.

    Parameters
    ----------
    evaluator : callable
        Maps an array of positive abscissae to values.
    jet : callable, optional
        ``jet(x, n)`` returns an array of shape ``(n + 1,) + x.shape`` holding
        the derivatives of orders ``0..n``.
    order : int
        Highest derivative order ``jet`` supports.
    grid : tuple, optional
        ``(x, values)`` for grid-kind functions.
    decay_hint : float or callable, optional
        Abscissa beyond which ``|f|`` is negligible; a callable is resolved
        (once) on first access.
    scale : float
        Smallest length scale of the function near the origin; used to
        place quadrature panels.
    """

    def __init__(self, evaluator, *, jet=None, order=0, grid=None, decay_hint=None,
                 scale=1.0, image=None, s_image=None, spectrum=None, terms=None,
                 label="", analytic_form=None):
        self._evaluator = evaluator
        self._jet = jet
        self.order = int(order) if jet is not None else 0
        self.grid = grid
        self._decay = decay_hint
        self.scale = float(scale)
        self.image = image
        self.s_image = s_image
        self.spectrum = spectrum
        self.terms = terms
        self.label = label
        self.analytic_form = analytic_form
        self._proxies = {}
        self.r_function = None
        self.r_mu = None

    # -- basic protocol
    @property
    def kind(self):
        return "grid" if self.grid is not None else "analytic"

    @property
    def decay_hint(self):
        if callable(self._decay):
            self._decay = float(self._decay())
        return self._decay

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return self._evaluator(x)

    def jet(self, x, n):
        """Derivatives of orders ``0..n`` at ``x``."""
        if n == 0:
            return self(x)[None]
        if self._jet is None or n > self.order:
            raise InsufficientDerivativesError(
                f"function {self.label or '<anon>'} provides derivatives up to order "
                f"{self.order}, {n} requested"
            )
        return self._jet(np.asarray(x, dtype=float), n)

    @property
    def derivatives(self):
        """Tuple of callables for the derivatives of orders ``1..order``."""
        return tuple((lambda x, k=k: self.jet(x, k)[k]) for k in range(1, self.order + 1))

    def __repr__(self):
        return f"HalfLineFunction({self.label or self.kind}, order={self.order})"

    # -- arithmetic sugar
    def __add__(self, other):
        return lincomb([(1.0, self), (1.0, _as_function(other))])

    __radd__ = __add__

    def __sub__(self, other):
        return lincomb([(1.0, self), (-1.0, _as_function(other))])

    def __rsub__(self, other):
        return lincomb([(1.0, _as_function(other)), (-1.0, self)])

    def __neg__(self):
        return lincomb([(-1.0, self)])

    def __mul__(self, other):
        if np.isscalar(other):
            return lincomb([(other, self)])
        return product(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)


def _as_function(obj):
    if isinstance(obj, HalfLineFunction):
        return obj
    if np.isscalar(obj):
        return constant(obj)
    raise TypeError(f"cannot combine HalfLineFunction with {type(obj).__name__}")


def _combine_decay(fs, how):
    def resolve():
        hints = [f.decay_hint for f in fs]
        if any(h is None for h in hints):
            return None if how == "max" else min((h for h in hints if h is not None), default=None)
        return max(hints) if how == "max" else min(hints)
    if all(not callable(f._decay) for f in fs):
        return resolve()
    return resolve


# ------------------------------------------------------- elementary functions

def power(p, coef=1.0):
    """``coef * x**p`` with derivatives of every order."""
    p = float(p)

    def ev(x):
        return coef * x ** p

    def jet(x, n):
        out = np.empty((n + 1,) + x.shape)
        fall = coef
        for k in range(n + 1):
            out[k] = fall * x ** (p - k)
            fall *= p - k
        return out

    f = HalfLineFunction(ev, jet=jet, order=64, label=f"x^{p:g}")
    f.monomial = (coef, p, 0.0)
    return f


def constant(c):
    """Constant function (``decay_hint`` unset)."""
    c = complex(c) if np.iscomplexobj(c) else float(c)

    def ev(x):
        return np.full(x.shape, c)

    def jet(x, n):
        out = np.zeros((n + 1,) + x.shape, dtype=np.result_type(c, float))
        out[0] = c
        return out

    return HalfLineFunction(ev, jet=jet, order=64, label=f"{c}")


def zero():
    """The zero function."""
    f = constant(0.0)
    f._decay = 1e-300
    f.label = "0"
    return f


def gaussian(b):
    """``exp(-b x**2)`` with derivatives through Hermite polynomials."""
    b = float(b)
    rb = math.sqrt(b)

    def ev(x):
        return np.exp(-b * x * x)

    def jet(x, n):
        t = rb * x
        g = np.exp(-t * t)
        h_prev = np.zeros_like(x)
        h = np.ones_like(x)
        out = np.empty((n + 1,) + x.shape)
        out[0] = g
        for k in range(1, n + 1):
            h_prev, h = h, 2.0 * t * h - 2.0 * (k - 1) * h_prev
            out[k] = (-rb) ** k * h * g
        return out

    f = HalfLineFunction(ev, jet=jet, order=64, decay_hint=math.sqrt(42.0 / b),
                         label=f"exp(-{b:g}x^2)")
    f.monomial = (1.0, 0.0, b)
    return f


def exponential(c):
    """``exp(-c x)``."""
    c = float(c)

    def ev(x):
        return np.exp(-c * x)

    def jet(x, n):
        e = np.exp(-c * x)
        return np.array([(-c) ** k * e for k in range(n + 1)])

    hint = 42.0 / c if c > 0 else None
    return HalfLineFunction(ev, jet=jet, order=64, decay_hint=hint, label=f"exp(-{c:g}x)")


def cosine(w=1.0):
    """``cos(w x)``."""
    w = float(w)

    def jet(x, n):
        return np.array([w ** k * np.cos(w * x + 0.5 * k * np.pi) for k in range(n + 1)])

    return HalfLineFunction(lambda x: np.cos(w * x), jet=jet, order=64, label=f"cos({w:g}x)")


def sine(w=1.0):
    """``sin(w x)``."""
    w = float(w)

    def jet(x, n):
        return np.array([w ** k * np.sin(w * x + 0.5 * k * np.pi) for k in range(n + 1)])

    return HalfLineFunction(lambda x: np.sin(w * x), jet=jet, order=64, label=f"sin({w:g}x)")


def dilate(g, l):
    """The function ``x -> g(l x)``."""
    l = float(l)
    hint = g.decay_hint

    def jet(x, n):
        j = g.jet(l * x, n)
        return np.array([l ** k * j[k] for k in range(n + 1)])

    return HalfLineFunction(lambda x: g(l * x), jet=jet if g.order else None, order=g.order,
                            decay_hint=None if hint is None else hint / l,
                            scale=g.scale / l, label=f"({g.label})(x*{l:g})")


def from_callable(evaluator, derivatives=(), decay_hint=None, label=""):
    """Wrap a user callable and optional derivative callables ``f', f'', ...``."""
    derivs = tuple(derivatives)

    def jet(x, n):
        return np.array([evaluator(x)] + [d(x) for d in derivs[:n]])

    return HalfLineFunction(evaluator, jet=jet if derivs else None, order=len(derivs),
                            decay_hint=decay_hint, label=label)


# --------------------------------------------------------------- algebra

def product(f, g):
    """Pointwise product; derivatives follow the Leibniz rule."""
    f, g = _as_function(f), _as_function(g)
    order = min(f.order, g.order)

    def ev(x):
        return f(x) * g(x)

    def jet(x, n):
        return leibniz(f.jet(x, n), g.jet(x, n), n)

    # a product decays as soon as either factor does
    out = HalfLineFunction(ev, jet=jet if order else None, order=order,
                           decay_hint=_combine_decay([f, g], "min"),
                           scale=min(f.scale, g.scale),
                           label=f"({f.label})*({g.label})")
    mf, mg = getattr(f, "monomial", None), getattr(g, "monomial", None)
    if mf is not None and mg is not None:
        # c x**p exp(-b x**2) is closed under products
        out.monomial = (mf[0] * mg[0], mf[1] + mg[1], mf[2] + mg[2])
    return out


def lincomb(terms: Sequence):
    """Linear combination ``sum c_i f_i`` of ``(c_i, f_i)`` pairs.

    When every summand is the image of the same commuting operator, the
    result is that operator applied to the combination of the sources.
    """
    terms = [(c, _as_function(f)) for c, f in terms]
    if not terms:
        return zero()
    keys = {f.image.key if f.image is not None else None for _, f in terms}
    if len(terms) > 1 and len(keys) == 1 and None not in keys:
        img = terms[0][1].image
        return img.apply(lincomb([(c, f.image.source) for c, f in terms]))
    families = {getattr(f, "family", None) for _, f in terms}
    if len(families) == 1 and None not in families:
        return terms[0][1].family_combine(terms)
    if len(terms) == 1 and terms[0][1].image is not None and terms[0][0] != 1.0:
        c, f = terms[0]
        return f.image.apply(lincomb([(c, f.image.source)]))

    order = min(f.order for _, f in terms)

    def ev(x):
        acc = 0
        for c, f in terms:
            acc = acc + c * f(x)
        return acc

    def jet(x, n):
        acc = 0
        for c, f in terms:
            acc = acc + c * f.jet(x, n)
        return acc

    scale = min(f.scale for _, f in terms)
    spectrum = None
    mus = {f.spectrum[0] if f.spectrum is not None else None for _, f in terms}
    if len(mus) == 1 and None not in mus:
        mu = mus.pop()
        spectrum = (mu, lincomb([(c, f.spectrum[1]) for c, f in terms]))
    return HalfLineFunction(ev, jet=jet if order else None, order=order,
                            decay_hint=_combine_decay([f for _, f in terms], "max"),
                            scale=scale, terms=terms, spectrum=spectrum,
                            label=" + ".join(f"{c}*({f.label})" for c, f in terms))


# ------------------------------------------------------------ grid kind

def _knot_exact(xs, vals, x, out):
    # return stored samples bit-exactly at the knots
    idx = np.clip(np.searchsorted(xs, x), 0, len(xs) - 1)
    hit = xs[idx] == x
    out[hit] = vals[idx[hit]]
    return out


def from_samples(x, values, *, decay_hint=None, abs_tol=DEFAULT_SPEC.abs_tol, label="grid",
                 warn=True):
    """Grid-kind function from samples, cubic interpolation, zero outside support.

    Parameters
    ----------
    x : array_like
        Strictly increasing positive abscissae.
    values : array_like
        Real or complex samples.
    """
    xs = np.asarray(x, dtype=float)
    vs = np.asarray(values)
    if xs.ndim != 1 or len(xs) < 2 or xs[0] <= 0 or np.any(np.diff(xs) <= 0):
        raise DomainError("grid abscissae must be strictly increasing and positive")
    if vs.shape != xs.shape:
        raise DomainError("values must match the abscissae")
    if warn and abs(vs[-1]) > abs_tol:
        warnings.warn(f"grid function is not negligible at its right edge ({abs(vs[-1]):.3g})",
                      DecayWarning, stacklevel=2)
    spline = CubicSpline(xs, vs)
    lo, hi = xs[0], xs[-1]

    def ev(x):
        out = np.zeros(x.shape, dtype=vs.dtype)
        inside = (x >= lo) & (x <= hi)
        out[inside] = spline(x[inside])
        return _knot_exact(xs, vs, x, out)

    def jet(x, n):
        out = np.zeros((n + 1,) + x.shape, dtype=vs.dtype)
        inside = (x >= lo) & (x <= hi)
        for k in range(n + 1):
            out[k][inside] = spline(x[inside], k)
        out[0] = _knot_exact(xs, vs, x, out[0])
        return out

    return HalfLineFunction(ev, jet=jet, order=2, grid=(xs, vs),
                            decay_hint=hi if decay_hint is None else decay_hint, label=label)


def _weighted_proxy(mu, xs, vals, decay_hint, label, source=None):
    """Grid function interpolating ``q = r f``, constant to the left, zero to the right."""
    a = mu + 0.5
    q = vals * xs ** (-a)
    spline = CubicSpline(xs, q)
    lo, hi = xs[0], xs[-1]

    def q_jet(x, n):
        out = np.zeros((n + 1,) + x.shape, dtype=q.dtype)
        inside = (x >= lo) & (x <= hi)
        for k in range(n + 1):
            out[k][inside] = spline(x[inside], k)
        out[0][x < lo] = q[0]
        return out

    def ev(x):
        return q_jet(x, 0)[0] * x ** a

    def jet(x, n):
        return leibniz(power(a).jet(x, n), q_jet(x, n), n)

    f = HalfLineFunction(ev, jet=jet, order=2, grid=(xs, vals), decay_hint=decay_hint,
                         label=f"grid[{label}]")
    f.weighted_q = (xs, q, spline)
    return f


def materialize_grid(upper, scale=1.0):
    """Default sampling abscissae for materializing a lazy function up to ``upper``."""
    lo = 1e-7 * min(1.0, scale)
    head = np.geomspace(lo, 0.5 * min(1.0, scale), 150, endpoint=False)
    if scale < 1.0:
        mid = np.geomspace(0.5 * scale, 0.5, 60, endpoint=False)
        head = np.concatenate([head, mid])
    a = np.arange(0.5, min(upper, 8.0), 0.02)
    parts = [head, a]
    if upper > 8.0:
        parts.append(np.arange(8.0, upper + 0.05, 0.05))
    else:
        parts.append([upper])
    xs = np.unique(np.concatenate(parts))
    return xs[xs <= max(upper, xs[0] * 2)]


def materialize(f, mu, grid=None):
    """Sampled stand-in for ``f`` that interpolates the weighted profile ``r f``.

    Interpolating ``r f`` rather than ``f`` keeps the ``x**(mu + 1/2)``
    behaviour at the origin exact.  The proxy is cached on ``f``.
    """
    mu = check_order(mu)
    if f.kind == "grid" or f._jet is not None:
        return f
    key = (mu, None if grid is None else tuple(np.asarray(grid)))
    proxy = f._proxies.get(key)
    if proxy is None:
        upper = f.decay_hint or DEFAULT_SPEC.x_max
        xs = materialize_grid(upper, f.scale) if grid is None else np.asarray(grid, dtype=float)
        proxy = _weighted_proxy(mu, xs, f(xs), xs[-1], f.label)
        f._proxies[key] = proxy
    return proxy


# ---------------------------------------------------------- integration

def integration_breakpoints(lo, hi, scale=1.0):
    """Initial panels: geometric near the origin, unit width further out."""
    knee = min(1.0, hi)
    pts = [np.geomspace(lo, knee, max(2, int(np.ceil(np.log10(knee / lo) * 1.5)) + 1))]
    if scale < 1.0:
        pts.append(np.geomspace(max(lo, 0.05 * scale), knee, 12))
    if hi > knee:
        pts.append(np.linspace(knee, hi, int(np.ceil(hi - knee)) + 1))
    bp = np.unique(np.concatenate(pts))
    return bp[(bp >= lo) & (bp <= hi)]


def _window(f, spec):
    hi = spec.x_max
    d = f.decay_hint
    if d is not None:
        hi = min(hi, d)
    return spec.x_min, max(hi, 2 * spec.x_min)


def integrate(g, spec=DEFAULT_SPEC, *, lo=None, hi=None):
    """Integral of ``g`` over the truncation window.

    Returns
    -------
    value : float or complex
    error : float
        Achieved error estimate.

    Raises
    ------
    ConvergenceError
        If the panel budget is exhausted above tolerance.
    """
    wlo, whi = _window(g, spec)
    lo = wlo if lo is None else lo
    hi = whi if hi is None else hi
    bp = integration_breakpoints(lo, hi, g.scale)
    val, err = adaptive_gk(g, bp, spec.rel_tol, spec.abs_tol, spec.max_subdivisions)
    return val[()], float(err)


def sup_grid(spec, upper=None, n=4096):
    hi = spec.x_max if upper is None else min(spec.x_max, upper)
    return np.geomspace(spec.x_min, hi, n)


def _sup_abs(fn, spec, upper=None, n=4096):
    xs = sup_grid(spec, upper, n)
    v = np.abs(fn(xs))
    i = int(np.argmax(v))
    best = v[i]
    lo, hi = xs[max(i - 1, 0)], xs[min(i + 1, len(xs) - 1)]
    fine = np.linspace(lo, hi, 65)
    return float(max(best, np.max(np.abs(fn(fine)))))


def norm(f, mu, kind=NormKind.LINF_R, spec=DEFAULT_SPEC):
    """Weighted norm of ``f``.

    ``Lp_srp`` is ``(int |f|**p s r**p)**(1/p)``, ``Linf_r`` is ``sup |r f|``
    over a dense log grid, ``L1_sr`` is ``int |f| s r`` and ``Y`` is the
    larger of the last two.
    """
    mu = check_order(mu)
    if isinstance(kind, str):
        kind = NormKind(kind)
    if kind.tag == "Y":
        return max(norm(f, mu, NormKind.L1_SR, spec), norm(f, mu, NormKind.LINF_R, spec))
    if kind.tag == "Linf_r":
        return _sup_abs(lambda x: x ** (-mu - 0.5) * f(x), spec, _window(f, spec)[1])
    p = 1.0 if kind.tag == "L1_sr" else kind.p
    cm = c_mu(mu)
    a = mu + 0.5

    def integrand(x):
        # s r**p = x**(2mu+1 - p(mu+1/2)) / c_mu
        return np.abs(f(x)) ** p * x ** (2 * a - p * a) / cm

    g = HalfLineFunction(integrand, decay_hint=f.decay_hint, scale=f.scale)
    val, _ = integrate(g, spec)
    return float(np.real(val)) ** (1.0 / p)


# ----------------------------------------------------------- seminorms

def _inv_x_d(jet_g, x, n):
    """Jet of ``g'(x)/x`` of order ``n - 1`` from the jet of ``g`` of order ``n``."""
    inv = power(-1.0).jet(x, n - 1)
    return leibniz(inv, jet_g[1:], n - 1)


def seminorm_gamma(f, mu, m, k, spec=DEFAULT_SPEC):
    """Seminorm ``sup |x**m (x**-1 D)**k (r f)|`` over the sup grid."""
    mu = check_order(mu)
    if m < 0 or k < 0:
        raise DomainError("m and k must be non-negative")
    q = None
    if k:
        q = f.r_function if getattr(f, "r_mu", None) == mu else product(power(-mu - 0.5), f)
    if k > 0 and q.order < k:
        raise InsufficientDerivativesError(f"seminorm needs {k} derivatives, have {f.order}")

    def fn(x):
        if k == 0:
            return x ** m * x ** (-mu - 0.5) * f(x)
        j = q.jet(x, k)
        for i in range(k):
            j = _inv_x_d(j, x, k - i)
        return x ** m * j[0]

    return _sup_abs(fn, spec, _window(f, spec)[1])


def seminorm_rho(f, mu, m, spec=DEFAULT_SPEC):
    """``max_{k <= m} ||S_mu**k f||_Y``."""
    from .besselop import apply_s

    mu = check_order(mu)
    best = 0.0
    g = f
    for k in range(m + 1):
        if k:
            g = apply_s(mu, g)
        best = max(best, norm(g, mu, NormKind.Y, spec))
    return best


def estimate_decay(f, spec=DEFAULT_SPEC, rel=1e-15, n=48):
    """Smallest sampled abscissa beyond which ``|f|`` stays below ``rel * max|f|``."""
    xs = np.geomspace(0.25, spec.x_max, n)
    v = np.abs(f(xs))
    peak = v.max()
    if peak == 0:
        return xs[0]
    # ignore quadrature noise near the absolute tolerance
    big = np.nonzero(v > max(rel * peak, 100.0 * spec.abs_tol))[0]
    i = big[-1] + 1
    if i >= len(xs):
        return spec.x_max
    return float(xs[i])


def check_l1_sr(f, mu, spec=DEFAULT_SPEC, rel=1e-6):
    """Warn when ``f`` does not look integrable against ``s r``.

    On a truncated window every bounded function has a finite norm, so the
    test asks instead whether the outer half of the window still carries
    more than ``rel`` of the mass.
    """
    try:
        full = norm(f, mu, NormKind.L1_SR, spec)
        half = norm(f, mu, NormKind.L1_SR, spec.with_(x_max=0.5 * spec.x_max))
        ok = np.isfinite(full) and full - half <= rel * full
    except ConvergenceError:
        ok = False
    if not ok:
        warnings.warn("function does not look integrable against s r", ClassCheckWarning,
                      stacklevel=2)
    return bool(ok)
