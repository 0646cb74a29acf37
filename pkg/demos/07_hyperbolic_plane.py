"""Waves on the Poincare upper half-plane.

The propagator integrates (cosh t - cosh d)^{-1/2} f over the geodesic
disk of radius t.  Geodesic polar coordinates plus the substitution
q^2 = cosh t - cosh r make the radial integrand constant for f == 1, which
pins the disk mass 4 sqrt(2) pi sinh(t/2) and the kernel normalization.
An independent frequency-domain route (one 1-D exponential-potential solve
per transverse frequency) reproduces the same values.
"""

import math

import numpy as np

from liouwave import (
    HyperbolicPoint,
    HyperbolicProfile,
    bump_profile_2d,
    disk_kernel_mass,
    geodesic_distance,
    hyperbolic_fourier_check,
    hyperbolic_solve,
)

print("geodesic distances from i = (0, 1):")
for p in ((0.0, 2.0), (1.0, 1.0), (3.0, 0.5)):
    d = geodesic_distance(HyperbolicPoint(0.0, 1.0), HyperbolicPoint(*p))
    print(f"  to {p}: {d:.6f}")
print()

print("disk mass vs the closed form 4 sqrt(2) pi sinh(t/2):")
for t in (0.5, 1.0, 2.0):
    exact = 4.0 * math.sqrt(2.0) * math.pi * math.sinh(0.5 * t)
    print(f"  t={t}: quadrature {disk_kernel_mass(t):.12f}  exact {exact:.12f}")
print()

ones = HyperbolicProfile(
    func=lambda x, y: np.ones(np.broadcast(x, y).shape),
    box=(-80.0, 80.0, 1e-4, 1e4),
)
w = HyperbolicPoint(0.0, 1.4)
print(f"uniform initial velocity: u(1, w) = {hyperbolic_solve(ones, 1.0, w):.12f}")
print(f"              2 sinh(1/2) = {2.0 * math.sinh(0.5):.12f}\n")

f = bump_profile_2d(-1.0, 1.0, 1.0, 2.0)
print("separable bump, w = (0, 1.4): disk propagator vs frequency route")
print(f"{'t':>5} {'disk':>16} {'frequency':>16} {'rel gap':>10}")
for t in (0.5, 1.0, 1.5):
    direct = hyperbolic_solve(f, t, w)
    freq = hyperbolic_fourier_check(f, t, w)
    print(f"{t:5.2f} {direct:16.10f} {freq:16.10f} {abs(freq - direct) / abs(direct):10.2e}")

print(f"\nsmall-time slope: u(0.01, w)/0.01 = {hyperbolic_solve(f, 1e-2, w) / 1e-2:.8f}"
      f"  vs f(w) = {float(f(w.x, w.y)):.8f}")
