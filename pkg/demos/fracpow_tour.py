"""Fractional powers of the Bessel operator.

Compares the Balakrishnan integral with the spectral multiplier
``y**(2 alpha)`` and shows that fractional powers of a Gaussian decay only
algebraically.  Run with ``python3 demos/fracpow_tour.py``; it takes
about a minute.
"""

import numpy as np

from besselfrac import (
    apply_delta,
    balakrishnan,
    frac_power_delta,
    frac_power_spectral,
    gauss,
    gaussian,
)

mu = 0.5
f = gauss(mu)
xs = np.geomspace(0.05, 6, 25)
r = xs ** (-mu - 0.5)


def rel(a, b):
    return np.max(np.abs(r * (a - b))) / np.max(np.abs(r * b))


print("Balakrishnan integral against the spectral multiplier")
for alpha in (0.25, 0.5, 0.75, 1.3, 0.5 + 0.3j):
    a = balakrishnan(mu, alpha, f)(xs)
    b = frac_power_spectral(mu, alpha, f)(xs)
    print(f"  alpha={alpha!s:10}: relative difference {rel(a, b):.2e}")

# alpha = 1 gives back -S f = (2(mu+1) - x**2) f
one = balakrishnan(mu, 1.0, f)(xs)
print(f"\nalpha=1 against -S f: {rel(one, (2 * (mu + 1) - xs ** 2) * f(xs)):.2e}")

# half of a half is a whole
half = balakrishnan(mu, 0.5, balakrishnan(mu, 0.5, f))(xs)
print(f"J(1/2) J(1/2) f against J(1) f: {rel(half, one):.2e}")

# the same powers for Delta by similarity
u = gaussian(0.5)
d = frac_power_delta(mu, 1.0, u)(xs)
print(f"(-Delta)**1 u against -Delta u: {np.max(np.abs(d + apply_delta(mu, u)(xs))):.2e}")

# non-integer powers are no longer Gaussian: the tail decays like x**(-mu - 2 alpha - 3/2)
tail = np.array([10.0, 20.0, 30.0])
vals = np.abs(frac_power_spectral(mu, 0.5, f)(tail))
slope = np.polyfit(np.log(tail), np.log(vals), 1)[0]
print(f"\nalpha=1/2 tail values {vals}, log-log slope {slope:.2f}")
