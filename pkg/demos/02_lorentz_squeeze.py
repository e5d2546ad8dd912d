"""
A boost is a squeeze
====================

In light-cone coordinates ``u = (z+t)/sqrt2``, ``v = (z-t)/sqrt2`` a boost
stretches ``u`` by ``e^eta`` and shrinks ``v`` by the same factor. The
oscillator wavefunction follows the same squeeze while its norm and its
eigenvalue under the covariant oscillator equation stay put.
"""

import numpy as np

from covosc import covariant

eta = 0.8
z, t = 1.0, 0.25
zb, tb = covariant.boost_coords(z, t, eta)
before, after = covariant.to_light_cone(z, t), covariant.to_light_cone(zb, tb)
print(f"u v before: {before.u * before.v:.15f}")
print(f"u v after:  {after.u * after.v:.15f}")

# norm of a few boosted states
for n in range(4):
    print(f"n={n}  norm={covariant.norm(n, eta):.15f}  residual={covariant.pde_residual(n, eta):.1e}")

# the overlap with the rest-frame state contracts as the boost grows
for beta in (0.0, 0.3, 0.6, 0.9):
    eta_b = np.arctanh(beta)
    row = [covariant.overlap(n, n, eta_b) for n in range(4)]
    print(f"beta={beta:.1f}", " ".join(f"{x:.5f}" for x in row))

# coarse picture of the squeezed ground state: rows are z (top is +z), columns t
ax = covariant.make_grid(3.0, 0.5)
grid = covariant.wavefunction_grid(0, 1.2, ax, ax)
for row in grid.values[::-1]:
    print("".join(" .:-=+*#"[min(7, int(8 * v / grid.values.max()))] for v in row))
