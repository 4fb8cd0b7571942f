"""The resolvent of the Bessel operator and its Macdonald kernel.

Run with ``python3 demos/resolvent_tour.py``.
"""

import numpy as np

from besselfrac import (
    NormKind,
    apply_s,
    gauss,
    hankel_transform,
    kernel_N,
    kernel_function,
    lincomb,
    norm,
    resolvent_apply,
    resolvent_spectral,
)

mu = 0.5
xs = np.geomspace(0.05, 6, 25)

# for mu = 1/2 the kernel is elementary
lam = 2.0
err = np.max(np.abs(kernel_N(mu, lam, xs) - np.sqrt(np.pi / 2) * np.exp(-np.sqrt(lam) * xs)))
print(f"kernel at mu=1/2 against sqrt(pi/2) exp(-sqrt(lam) x): {err:.2e}")

# its transform is y**(mu+1/2) / (lam + y**2)
for mu2 in (-0.25, 1.5):
    k = kernel_function(mu2, lam)
    ys = np.array([0.5, 1.0, 2.0])
    got = hankel_transform(mu2, k)(ys)
    print(f"  mu={mu2:5}: transform of the kernel, rel err "
          f"{np.max(np.abs(got / (ys ** (mu2 + 0.5) / (lam + ys ** 2)) - 1)):.2e}")

# kernel route against the spectral multiplier route
f = gauss(mu)
r1 = resolvent_apply(mu, lam, f)
r2 = resolvent_spectral(mu, lam, f)
print(f"\nresolvent, kernel vs spectral: {np.max(np.abs(r1(xs) - r2(xs))):.2e}")

# (lam - S) R f = f
defect = lincomb([(lam, r1), (-1.0, apply_s(mu, r1))])
print(f"defect |(lam - S) R f - f|: {np.max(np.abs(defect(xs) - f(xs))):.2e}")

# contraction in the weighted sup norm
kind = NormKind.LINF_R
print("\nlam |R f| / |f| in L-infinity(r):")
for lam in (0.25, 1.0, 4.0):
    ratio = lam * norm(resolvent_apply(mu, lam, f), mu, kind) / norm(f, mu, kind)
    print(f"  lam={lam:4}: {ratio:.6f}")
