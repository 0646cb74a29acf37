"""Why the propagator carries a factor 1/2.

With zero coupling the kernel is identically 1 and the propagator must
reduce to d'Alembert's solution (1/2) * integral of f over the cone: only
then does the time derivative at t = 0+ equal the initial velocity f.
A unit factor would give exactly twice the right value, which the
small-time slope exposes immediately.
"""

import numpy as np
from scipy.integrate import quad

from liouwave import BumpProfile, small_time_slope, solve_cauchy

bump = BumpProfile(-1.0, 1.0)

t, x = 0.5, 0.0
ref = 0.5 * quad(bump, x - t, x + t, epsabs=1e-14)[0]
val = solve_cauchy(0.0, bump, t, x)
print(f"d'Alembert reference (adaptive quadrature): {ref:.15f}")
print(f"propagator with k = 0:                      {val:.15f}")
print(f"difference: {abs(val - ref):.2e}")
print(f"unit-factor variant would give:             {2 * val:.15f}  (off by 2x)\n")

print("small-time slope u(t, x)/t -> f(x) with k = 1:")
print(f"{'x':>6} {'slope at t=0.01':>18} {'f(x)':>12} {'error':>10}")
for x in np.linspace(-0.75, 0.75, 7):
    s = small_time_slope(1.0, bump, float(x), 1e-2)
    f = bump(float(x))
    print(f"{x:6.2f} {s:18.9f} {f:12.9f} {abs(s - f):10.2e}")
