"""
Two coupled oscillators
=======================

A pair of unit-mass oscillators with potential ``(A x1^2 + A x2^2 + 2C x1 x2)/2``
decouples in the rotated coordinates ``y = (x1 +- x2)/sqrt(2)``. The
stiffnesses of the two modes are ``K e^(-+2 eta)``.
"""

import math

import numpy as np

from covosc import coupled_osc

np.set_printoptions(precision=5, suppress=True)

h = coupled_osc.CoupledHamiltonian(m=1.0, A=5.0, C=3.0)
spec = coupled_osc.diagonalize(h)
print(f"K = {spec.K:.6f}, eta = {spec.eta:.6f}, omega = {spec.omega:.6f}")

# mode stiffnesses against the eigenvalues of the potential matrix
print("K e^(-+2eta):", spec.K * math.exp(-2 * spec.eta), spec.K * math.exp(2 * spec.eta))
print("eigenvalues: ", np.linalg.eigvalsh(h.potential_matrix))

w_plus, w_minus = coupled_osc.eigenfrequencies(spec)
print(f"omega+ = {w_plus:.6f}, omega- = {w_minus:.6f}, product = {w_plus * w_minus:.6f}")

# the ground state is a Gaussian squeezed along the normal axes
x = np.linspace(-4, 4, 9)
x1, x2 = np.meshgrid(x, x, indexing="ij")
psi = coupled_osc.coupled_ground_state(spec.eta, x1, x2)
print("ground state on the diagonal x1 = x2:", np.diag(psi))
print("ground state on the antidiagonal:   ", np.diag(psi[:, ::-1]))
