"""Resolvent of S_mu on the positive axis via the Macdonald kernel.

``(lambda - S_mu)**-1 f`` is the Hankel convolution of ``f`` with
``N_lambda(x) = lambda**(mu/2) x**(1/2) K_mu(sqrt(lambda) x)``.  Powers of the
resolvent use the kernel

    N_lambda^(m)(x) = x**(1/2) (x/2)**(m-1) / (m-1)! * lambda**((mu-m+1)/2)
                      * K_{mu-m+1}(sqrt(lambda) x),

whose transform is ``y**(mu+1/2) / (lambda + y**2)**m``, so an m-fold
resolvent costs a single convolution.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .funcspace import (
    DEFAULT_SPEC,
    HalfLineFunction,
    OperatorImage,
    check_order,
    product,
)
from .hankel import hankel_transform
from .hconv import convolve
from .specfun import log_macdonald_k, macdonald_table

__all__ = ["check_lambda", "kernel_N", "kernel_function", "resolvent_apply", "resolvent_spectral"]


def check_lambda(lam):
    lam = float(lam)
    if not lam > 0:
        raise DomainError("lambda must be positive")
    return lam


def _kernel_values(mu, lam, x, m=1, tabulated=True):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("kernel_N needs x > 0")
    nu = mu - m + 1.0
    z = np.sqrt(lam) * x
    logk = macdonald_table(nu).log(z) if tabulated else log_macdonald_k(nu, z)
    logv = 0.5 * nu * np.log(lam) + 0.5 * np.log(x) + logk
    if m > 1:
        logv = logv + (m - 1) * np.log(0.5 * x) - math.lgamma(m)
    return np.exp(logv)


def kernel_N(mu, lam, x):
    """``lambda**(mu/2) x**(1/2) K_mu(sqrt(lambda) x)``, strictly positive."""
    mu = check_order(mu)
    lam = check_lambda(lam)
    return _kernel_values(mu, lam, x, tabulated=False)


def kernel_function(mu, lam, m=1):
    """Kernel of the ``m``-th power of the resolvent as a function object."""
    mu = check_order(mu)
    lam = check_lambda(lam)
    if int(m) != m or m < 1:
        raise DomainError("resolvent power must be a positive integer")
    m = int(m)
    f = HalfLineFunction(lambda x: _kernel_values(mu, lam, x, m),
                         decay_hint=(40.0 + 4.0 * (m - 1)) / math.sqrt(lam),
                         scale=min(1.0, 1.0 / math.sqrt(lam)),
                         label=f"N[{lam:g}]^{m}")
    # r N is unbounded at the origin for mu > 0, so it must be the outer factor
    f.r_singular = True
    return f


def resolvent_apply(mu, lam, f, spec=DEFAULT_SPEC, power=1):
    """``(lambda - S_mu)**-power f`` computed as a Hankel convolution.

    Parameters
    ----------
    mu : float
    lam : float
        Positive resolvent parameter.
    f : HalfLineFunction
    spec : QuadratureSpec
    power : int
        Number of resolvent applications; nested calls with the same
        ``lam`` are merged into one convolution with the iterated kernel.
    """
    mu = check_order(mu)
    lam = check_lambda(lam)
    power = int(power)
    if power < 1:
        raise DomainError("power must be >= 1")
    img = f.image
    if img is not None and img.key[0] == "resolvent" and img.key[1:3] == (mu, lam) \
            and img.key[4] == spec:
        return resolvent_apply(mu, lam, img.source, spec, power + img.key[3])
    out = convolve(mu, kernel_function(mu, lam, power), f, spec)
    out.image = OperatorImage(("resolvent", mu, lam, power, spec), f,
                              lambda h: resolvent_apply(mu, lam, h, spec, power))
    out.label = f"R[{lam:g}]^{power}({f.label})"
    return out


def resolvent_spectral(mu, lam, f, spec=DEFAULT_SPEC):
    """Resolvent through the transform: ``h(h(f) / (lambda + y**2))``."""
    mu = check_order(mu)
    lam = check_lambda(lam)
    mult = HalfLineFunction(lambda y: 1.0 / (lam + y * y), label=f"1/({lam:g}+y^2)")
    inner = product(hankel_transform(mu, f, spec), mult)
    out = hankel_transform(mu, inner, spec)
    out.spectrum = (mu, inner)
    out.label = f"Rspec[{lam:g}]({f.label})"
    return out
