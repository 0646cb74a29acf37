"""The lossy transmission line.

Voltage on a line with coefficients alpha, beta obeys
v_tt + (alpha + beta) v_t + alpha beta v = v_xx.  Peeling off the damping
e^{-(alpha+beta)t/2} leaves a wave equation whose zero-order term has the
opposite sign from the constant-potential case, so the cone kernel is the
modified Bessel I0 with coupling |alpha - beta| / 2.  A direct damped-wave
leapfrog solve is the referee.
"""

import numpy as np

from liouwave import (
    BumpProfile,
    FDConfig,
    TelegraphParams,
    fd_telegraph_solve,
    telegraph_solve,
)

bump = BumpProfile(-1.0, 1.0)

for alpha, beta in ((1.0, 1.0), (2.0, 0.0), (0.5, 1.5)):
    params = TelegraphParams(alpha, beta)
    cfg = FDConfig(x_min=-3.5, x_max=3.5, dx=1e-3, t_final=1.0)
    field = fd_telegraph_solve(params, bump, cfg)
    t = float(field.times[0])
    worst = 0.0
    for x in np.linspace(-2.0, 2.0, 21):
        j = field.position_index(float(x))
        closed = telegraph_solve(params, bump, t, float(field.positions[j]))
        worst = max(worst, abs(closed - field.values[0, j]))
    tag = "distortionless" if params.mass == 0.0 else f"mass {params.mass:g}"
    print(f"alpha={alpha:3.1f} beta={beta:3.1f} ({tag}): "
          f"damping {params.damping:g}, worst |closed - leapfrog| = {worst:.2e}")

print("\nsample waveform, alpha=2, beta=0, t=1:")
params = TelegraphParams(2.0, 0.0)
print(f"{'x':>6} {'v(t, x)':>14}")
for x in np.linspace(-2.0, 2.0, 9):
    print(f"{x:6.2f} {telegraph_solve(params, bump, 1.0, float(x)):14.9f}")
