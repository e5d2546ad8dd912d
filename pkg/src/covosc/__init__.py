"""Coupled, entangled and Lorentz-covariant harmonic oscillators.

Submodules
----------
hermite      Hermite polynomials, oscillator eigenfunctions, Gauss-Hermite rules
coupled_osc  normal modes and ground state of two coupled oscillators
covariant    boosts, light-cone squeeze, covariant wavefunctions, overlaps
entangle     Schmidt expansion, partial trace, purity, entropy
parton       momentum wavefunction, beam kinematics, decoherence ratio
cli          command-line front end (``covosc``)
"""

__version__ = "0.1.0"

from . import coupled_osc, covariant, entangle, hermite, parton  # noqa: E402
from .errors import AxisTooSmallError, CovoscError, InvariantError, QuadratureOrderError  # noqa: E402

__all__ = [
    "coupled_osc",
    "covariant",
    "entangle",
    "hermite",
    "parton",
    "CovoscError",
    "InvariantError",
    "QuadratureOrderError",
    "AxisTooSmallError",
]
