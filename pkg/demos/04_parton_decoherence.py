"""
Why a fast proton looks like free partons
=========================================

At 900 GeV the proton's momentum-space distribution is squeezed by
``e^(2 eta)`` along one light-cone axis. The ratio of the two axis widths
is the ratio of the probe's interaction time to the internal oscillation
period.
"""

import numpy as np

from covosc import parton

for energy in (1.0, 10.0, 100.0, 900.0):
    k = parton.kinematics(energy)
    major, minor = parton.axis_widths(k.eta)
    print(f"E = {energy:6.1f} GeV  gamma = {k.gamma:8.2f}  eta = {k.eta:6.3f}  "
          f"widths = ({major:9.3e}, {minor:9.3e})  ratio = {parton.decoherence_ratio(k):.3e}")

# the momentum wavefunction is the Fourier transform of the spatial one
fc = parton.fourier_check(0.8)
print("kernel signs", fc.convention, "max error", f"{fc.max_error:.1e}")

eta = 0.8
ax = np.arange(-10 * np.exp(eta), 10 * np.exp(eta) + 1e-9, 0.05)
cov = parton.second_moment_matrix(parton.momentum_grid(eta, ax, ax))
print("second moments in (q_z, q_0):\n", np.round(cov, 6))
print("eigenvalues:", np.linalg.eigvalsh(cov), "expected:", np.exp([-2 * eta, 2 * eta]) / 2)
