"""The light-cone kernel and its argument.

The wave kernel for u_tt = u_xx - k^2 e^{2x} u depends on (t, x, x') only
through a single Bessel argument z that vanishes exactly on the cone
|x - x'| = |t|.  This script walks the argument across the cone, shows the
closed-form partial derivatives against finite differences, and confirms
numerically that the kernel solves the equation.
"""

import numpy as np

from liouwave import (
    kernel_argument,
    kernel_argument_partials,
    pde_residual,
    wave_kernel,
)

k = 1.0
t = 1.5
x = 0.2

print(f"kernel argument across the cone at t={t}, x={x}, k={k}:")
print(f"{'xp':>8} {'z':>12} {'J0 branch':>12}")
for xp in np.linspace(x - t, x + t, 9):
    z = kernel_argument(t, x, float(xp), k)
    w = wave_kernel(t, x, float(xp), k)
    print(f"{xp:8.3f} {z:12.6f} {w:12.6f}")
print("   (z = 0 and kernel = 1 at both cone endpoints)\n")

print("closed-form partials vs central differences at (t, x, xp) = (2, 0.1, -0.4):")
p = kernel_argument_partials(2.0, 0.1, -0.4, k)
h = 1e-5
fd_x = (kernel_argument(2.0, 0.1 + h, -0.4, k) - kernel_argument(2.0, 0.1 - h, -0.4, k)) / (2 * h)
fd_t = (kernel_argument(2.0 + h, 0.1, -0.4, k) - kernel_argument(2.0 - h, 0.1, -0.4, k)) / (2 * h)
print(f"  d/dx : closed {p.d_x:+.12f}   fd {fd_x:+.12f}")
print(f"  d/dt : closed {p.d_t:+.12f}   fd {fd_t:+.12f}\n")

print("wave-equation residual of the kernel (central differences, step h):")
for h in (1e-2, 1e-3):
    r_first = pde_residual(2.0, 0.0, 0.3, k, h=h)
    r_second = pde_residual(2.0, 0.0, 0.3, k, a=0.0, b=1.0, h=h)
    print(f"  h={h:g}: first-kind {r_first:+.3e}   second-kind {r_second:+.3e}")
print("   (residuals shrink 100x per tenfold step refinement: pure truncation)")
