"""Hankel transforms, Hankel convolution and fractional powers of Bessel operators.

Functions on ``(0, inf)`` are :class:`HalfLineFunction` objects, either
analytic (with derivative jets) or sampled on a grid.  Operators return
lazily evaluated functions that are computed when called on an array of
abscissae.
"""

from .besselop import (
    MultiplierConjugation,
    apply_delta,
    apply_s,
    apply_s_power,
    conjugate_apply,
    sturm_liouville,
)
from .corpus import BUILTINS, builtin, gauss, gauss2, gauss_cos, gauss_poly, poly_gauss
from .errors import (
    BesselFracError,
    ClassCheckWarning,
    ConvergenceError,
    DecayWarning,
    DomainError,
    InsufficientDerivativesError,
    OscillationError,
)
from .fracpow import (
    Alpha,
    balakrishnan,
    balakrishnan_sine,
    bracket,
    frac_power,
    frac_power_delta,
    frac_power_spectral,
)
from .funcspace import (
    DEFAULT_SPEC,
    HalfLineFunction,
    NormKind,
    QuadratureSpec,
    c_mu,
    dilate,
    from_callable,
    from_samples,
    gaussian,
    integrate,
    materialize,
    norm,
    power,
    product,
    lincomb,
    seminorm_gamma,
    seminorm_rho,
    weight_r,
    weight_s,
)
from .hankel import hankel_transform, pairing
from .hconv import approx_identity_member, convolve, kernel_D
from .resolvent import kernel_N, kernel_function, resolvent_apply, resolvent_spectral
from .specfun import bessel_j, bessel_j_scaled, gamma_fn, macdonald_k

__version__ = "0.1.0"

__all__ = [
    "Alpha",
    "BUILTINS",
    "BesselFracError",
    "ClassCheckWarning",
    "ConvergenceError",
    "DEFAULT_SPEC",
    "DecayWarning",
    "DomainError",
    "HalfLineFunction",
    "InsufficientDerivativesError",
    "MultiplierConjugation",
    "NormKind",
    "OscillationError",
    "QuadratureSpec",
    "apply_delta",
    "apply_s",
    "apply_s_power",
    "approx_identity_member",
    "balakrishnan",
    "balakrishnan_sine",
    "bessel_j",
    "bessel_j_scaled",
    "bracket",
    "builtin",
    "c_mu",
    "conjugate_apply",
    "convolve",
    "dilate",
    "frac_power",
    "frac_power_delta",
    "frac_power_spectral",
    "from_callable",
    "from_samples",
    "gamma_fn",
    "gauss",
    "gauss2",
    "gauss_cos",
    "gauss_poly",
    "gaussian",
    "hankel_transform",
    "integrate",
    "kernel_D",
    "kernel_N",
    "kernel_function",
    "lincomb",
    "macdonald_k",
    "materialize",
    "norm",
    "pairing",
    "poly_gauss",
    "power",
    "product",
    "resolvent_apply",
    "resolvent_spectral",
    "seminorm_gamma",
    "seminorm_rho",
    "sturm_liouville",
    "weight_r",
    "weight_s",
]
