"""Two identical coupled oscillators and their normal modes.

The Hamiltonian is

.. math:: H = \\tfrac12\\left[\\frac{p_1^2 + p_2^2}{m} + A x_1^2 + A x_2^2 + 2 C x_1 x_2\\right].

Rotating to ``y1 = (x1 + x2)/sqrt(2)``, ``y2 = (x1 - x2)/sqrt(2)`` diagonalizes the
potential with stiffnesses ``K exp(-2 eta)`` and ``K exp(2 eta)``, where
``K = sqrt(A^2 - C^2)`` and ``exp(2 eta) = sqrt((A - C)/(A + C))``. With this
sign convention ``C > 0`` gives ``eta < 0``.

Units: hbar = 1, and wavefunction coordinates are dimensionless.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import InvariantError

__all__ = [
    "CoupledHamiltonian",
    "NormalModeSpec",
    "normal_coordinates",
    "diagonalize",
    "eigenfrequencies",
    "hamiltonian_from_modes",
    "coupled_ground_state",
    "ground_state_normal",
]

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class CoupledHamiltonian:
    """Mass ``m`` and potential coefficients ``A`` (diagonal) and ``C`` (coupling)."""

    m: float
    A: float
    C: float

    def __post_init__(self):
        if not self.m > 0:
            raise InvariantError(f"mass must be positive, got m={self.m}", "m > 0")
        if not self.A > 0:
            raise InvariantError(f"diagonal stiffness must be positive, got A={self.A}", "A > 0")
        if not abs(self.C) < self.A:
            raise InvariantError(
                f"|C| must be smaller than A for a stable system, got A={self.A}, C={self.C}",
                "|C| < A")

    @property
    def potential_matrix(self):
        return np.array([[self.A, self.C], [self.C, self.A]], dtype=float)


@dataclass(frozen=True)
class NormalModeSpec:
    K: float
    eta: float
    omega: float


def normal_coordinates(x1, x2):
    """Rotate ``(x1, x2)`` to the normal coordinates ``(y1, y2)``.

    The map is orthogonal, so ``y1**2 + y2**2 == x1**2 + x2**2``.
    """
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    return (x1 + x2) / _SQRT2, (x1 - x2) / _SQRT2


def diagonalize(h):
    """Effective stiffness ``K``, squeeze parameter ``eta`` and base frequency.

    Raises
    ------
    InvariantError
        If ``|C| >= A`` (the constructor already refuses it, this guards
        duck-typed inputs).
    """
    m, A, C = float(h.m), float(h.A), float(h.C)
    if not (m > 0 and A > 0 and abs(C) < A):
        raise InvariantError(f"unstable or invalid oscillator: m={m}, A={A}, C={C}",
                             "m > 0, A > 0 and |C| < A")
    K = math.sqrt((A - C) * (A + C))
    eta = 0.25 * (math.log(A - C) - math.log(A + C))
    return NormalModeSpec(K=K, eta=eta, omega=math.sqrt(K / m))


def eigenfrequencies(spec):
    """Classical normal-mode frequencies ``(omega_plus, omega_minus)``.

    The mode stiffnesses are ``K exp(-+2 eta)``, so the frequencies are
    ``omega * exp(+-eta)`` and ``omega_plus * omega_minus == omega**2``.
    ``omega_plus`` belongs to the symmetric coordinate ``y1`` only when
    ``eta < 0`` (i.e. ``C > 0``).
    """
    return spec.omega * math.exp(spec.eta), spec.omega * math.exp(-spec.eta)


def hamiltonian_from_modes(K, eta, m=1.0):
    """Inverse of :func:`diagonalize`: ``A = K cosh 2eta``, ``C = -K sinh 2eta``."""
    return CoupledHamiltonian(m=m, A=K * math.cosh(2 * eta), C=-K * math.sinh(2 * eta))


def ground_state_normal(eta, y1, y2):
    """Ground state written in normal coordinates; separable in ``y1``, ``y2``."""
    y1 = np.asarray(y1, dtype=float)
    y2 = np.asarray(y2, dtype=float)
    return np.exp(-0.5 * (math.exp(-2 * eta) * y1 ** 2 + math.exp(2 * eta) * y2 ** 2)) / math.sqrt(math.pi)


def coupled_ground_state(eta, x1, x2):
    """Entangled ground state ``psi_eta(x1, x2)``.

    .. math:: \\psi_\\eta = \\pi^{-1/2}\\exp\\{-\\tfrac14[e^{-2\\eta}(x_1+x_2)^2
              + e^{2\\eta}(x_1-x_2)^2]\\}

    Normalized for every ``eta`` because the squeeze preserves area. At
    ``eta = 0`` it factorizes into ``phi_0(x1) phi_0(x2)``.
    """
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    s = x1 + x2
    d = x1 - x2
    return np.exp(-0.25 * (math.exp(-2 * eta) * s * s + math.exp(2 * eta) * d * d)) / math.sqrt(math.pi)
