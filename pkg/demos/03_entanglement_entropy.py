"""
Entanglement from an unobserved time variable
=============================================

The boosted ground state is a single Schmidt sum over oscillator states in
``z`` and ``t``. Tracing over ``t`` leaves a thermal-looking mixture whose
purity drops as ``1/cosh 2eta``.
"""

import numpy as np

from covosc import entangle

eta = 1.0
sp = entangle.schmidt(eta, 6)
print("Schmidt coefficients:", np.round(sp.coeffs, 6))
print(f"projection check: {entangle.verify_expansion(eta, 12):.1e}")

# partial trace on a position grid against the Fock-space reconstruction
axis = entangle.reduced_axis(eta)
rho = entangle.reduce_over_t(eta, axis)
dev = np.max(np.abs(rho.matrix - entangle.fock_reconstruction(eta, axis)))
print(f"trace = {rho.trace():.12f}, grid vs Fock = {dev:.1e}")
print("leading eigenvalues:", np.round(rho.eigenvalues()[:4], 8))
print("Schmidt weights:    ", np.round(sp.probs[:4], 8))

print(" eta   purity    entropy   thermal(x)")
for e in (0.25, 0.5, 1.0, 2.0, 3.0):
    x = entangle.matched_thermal(e)
    print(f"{e:4.2f}  {entangle.purity(e):.6f}  {entangle.entropy(e):.6f}  {entangle.thermal_entropy(x):.6f}")
