"""Bessel differential operators and multiplier conjugation.

``apply_delta`` and ``apply_s`` act on derivative jets of analytic or grid
functions.  Lazy results of operators commuting with ``S_mu`` (Hankel
convolutions, resolvents, Balakrishnan integrals) are handled by moving
``S_mu`` onto the operand, which is typically analytic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InsufficientDerivativesError
from .funcspace import (
    HalfLineFunction,
    check_order,
    leibniz,
    lincomb,
    power,
    product,
)

__all__ = [
    "MultiplierConjugation",
    "apply_delta",
    "apply_s",
    "apply_s_power",
    "sturm_liouville",
    "conjugate_apply",
]


def _needs(f, n):
    if f.order < n:
        raise InsufficientDerivativesError(
            f"operator needs {n} derivatives of {f.label or 'f'}, only {f.order} available"
        )


def apply_delta(mu, f):
    """``f'' + (2 mu + 1) f' / x``."""
    mu = check_order(mu)
    if f.terms is not None and f.order < 2:
        return lincomb([(c, apply_delta(mu, g)) for c, g in f.terms])
    _needs(f, 2)
    b = 2.0 * mu + 1.0
    inv = power(-1.0)

    def jet(x, n):
        jf = f.jet(x, n + 2)
        return jf[2:] + b * leibniz(inv.jet(x, n), jf[1:], n)

    return HalfLineFunction(lambda x: jet(x, 0)[0], jet=jet, order=f.order - 2,
                            decay_hint=f._decay, scale=f.scale,
                            label=f"Delta({f.label})")


def _s_jet_function(mu, f):
    _needs(f, 2)
    c = (4.0 * mu * mu - 1.0) / 4.0
    inv2 = power(-2.0)

    def jet(x, n):
        jf = f.jet(x, n + 2)
        if c == 0.0:
            return jf[2:]
        return jf[2:] - c * leibniz(inv2.jet(x, n), jf[: n + 1], n)

    return HalfLineFunction(lambda x: jet(x, 0)[0], jet=jet, order=f.order - 2,
                            decay_hint=f._decay, scale=f.scale, label=f"S({f.label})")


def apply_s(mu, f):
    """``f'' - (4 mu**2 - 1) / (4 x**2) f``.

    Lazy operator images are handled by commuting ``S_mu`` onto their
    operand, so no numerical differentiation of quadrature output occurs.
    """
    mu = check_order(mu)
    if f.s_image is not None:
        out = f.s_image(mu)
        if out is not None:
            return out
    if f.order >= 2:
        return _s_jet_function(mu, f)
    if f.image is not None and f.image.key[1] == mu:
        return f.image.apply(apply_s(mu, f.image.source))
    if f.terms is not None:
        return lincomb([(c, apply_s(mu, g)) for c, g in f.terms])
    return _s_jet_function(mu, f)


def apply_s_power(mu, f, k):
    """``k``-fold application of :func:`apply_s`; ``k = 0`` returns ``f``."""
    if k < 0:
        raise DomainError("k must be non-negative")
    for _ in range(int(k)):
        f = apply_s(mu, f)
    return f


def sturm_liouville(mu, f):
    """``x**(2 mu + 1) * Delta_mu f``."""
    mu = check_order(mu)
    return product(power(2.0 * mu + 1.0), apply_delta(mu, f))


@dataclass(frozen=True)
class MultiplierConjugation:
    """Pointwise multiplier ``m`` with its reciprocal."""

    multiplier: HalfLineFunction
    inverse: HalfLineFunction

    @classmethod
    def power(cls, p):
        """Conjugation by ``x**p``."""
        return cls(power(p), power(-p))

    def check(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(~(np.real(self.multiplier(x)) > 0)):
            raise DomainError("conjugation multiplier must be positive")
        return True


def conjugate_apply(op, conj, f):
    """``m * op(m**-1 * f)`` for a multiplier conjugation ``m``."""
    return product(conj.multiplier, op(product(conj.inverse, f)))
