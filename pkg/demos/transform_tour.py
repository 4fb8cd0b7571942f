"""A tour of the Hankel transform and Hankel convolution.

Run with ``python3 demos/transform_tour.py``.  Prints a handful of
numbers; every one of them should be tiny or match its neighbour.
"""

import numpy as np

from besselfrac import (
    NormKind,
    convolve,
    gauss,
    gauss2,
    hankel_transform,
    norm,
    weight_r,
)

xs = np.geomspace(0.05, 6, 25)

# x**(mu+1/2) exp(-x**2/2) is its own transform for every order
print("self-reciprocity of the Gaussian")
for mu in (-0.25, 0.5, 1.5):
    f = gauss(mu)
    err = np.max(np.abs(hankel_transform(mu, f)(xs) - f(xs)))
    print(f"  mu={mu:5}: max |h f - f| = {err:.2e}")

# a narrower Gaussian transforms into a wider one
mu = 0.5
f = gauss2(mu)
ref = 2 ** (-mu - 1) * xs ** (mu + 0.5) * np.exp(-xs ** 2 / 4)
print(f"\nnarrow Gaussian, max error against the closed form: "
      f"{np.max(np.abs(hankel_transform(mu, f)(xs) - ref)):.2e}")

# transforming twice gives the function back
twice = hankel_transform(mu, hankel_transform(mu, f))
print(f"inversion, max |h h f - f| = {np.max(np.abs(twice(xs) - f(xs))):.2e}")

# the transform turns convolution into a weighted product
g = gauss(mu)
lhs = hankel_transform(mu, convolve(mu, f, g))(xs)
rhs = weight_r(mu, xs) * hankel_transform(mu, f)(xs) * hankel_transform(mu, g)(xs)
print(f"convolution theorem, max difference = {np.max(np.abs(lhs - rhs)):.2e}")

# Young with p = 1 in L1(s r); for non-negative f and g it is an equality
l1 = NormKind("L1_sr")
fg = norm(convolve(mu, f, g), mu, l1)
bound = norm(f, mu, l1) * norm(g, mu, l1)
print(f"Young p=1: {fg:.6f} <= {bound:.6f}")
