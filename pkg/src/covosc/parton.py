"""Momentum-energy wavefunction, boost kinematics and the parton decoherence ratio.

A hadron of energy ``E`` and mass ``m`` is boosted by ``eta = arccosh(E/m)``.
Its internal wavefunctions in ``(z, t)`` and in ``(q_z, q_0)`` are squeezed the
same way: one light-cone axis grows by ``e^eta``, the other shrinks by
``e^-eta``. An external signal crossing the short axis sees the quarks
interact for a time ``e^-eta`` against an oscillation period ``e^eta``, a
ratio ``e^-2eta``.
"""

from dataclasses import dataclass
import itertools
import math

import numpy as np

from .covariant import WaveGrid, as_eta, boosted_wavefunction
from .errors import InvariantError

__all__ = [
    "PROTON_MASS_GEV",
    "BoostKinematics",
    "MomentumVars",
    "separation_coordinate",
    "momentum_vars",
    "momentum_wavefunction",
    "momentum_grid",
    "fourier_transform_grid",
    "FourierCheck",
    "fourier_check",
    "kinematics",
    "axis_widths",
    "decoherence_ratio",
    "second_moment_matrix",
]

#: Proton rest mass in GeV.
PROTON_MASS_GEV = 0.938272

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class BoostKinematics:
    energy: float
    mass: float
    gamma: float
    eta: float


@dataclass(frozen=True)
class MomentumVars:
    """Four-momentum separation ``q`` with its light-cone components.

    Note the pairing: ``q_u = (q_0 - q_z)/sqrt(2)`` and ``q_v = (q_0 + q_z)/sqrt(2)``,
    opposite in sign to the space-time ``u, v``.
    """

    q_z: float
    q_0: float
    q_u: float
    q_v: float

    @classmethod
    def from_components(cls, q_z, q_0):
        return cls(q_z, q_0, (q_0 - q_z) / _SQRT2, (q_0 + q_z) / _SQRT2)


def separation_coordinate(x_a, x_b):
    """Quark space-time separation ``(x_a - x_b) / (2 sqrt(2))``, componentwise."""
    return tuple((a - b) / (2.0 * _SQRT2) for a, b in zip(x_a, x_b))


def momentum_vars(p_a, p_b):
    """Total momentum ``P = p_a + p_b`` and separation ``q = sqrt(2)(p_a - p_b)``.

    Four-momenta are ``(p_z, energy)`` pairs. Returns ``(P, MomentumVars)``.

    >>> P, q = momentum_vars((1.0, 2.0), (0.0, 1.0))
    >>> P
    (1.0, 3.0)
    """
    P = (p_a[0] + p_b[0], p_a[1] + p_b[1])
    q_z = _SQRT2 * (p_a[0] - p_b[0])
    q_0 = _SQRT2 * (p_a[1] - p_b[1])
    return P, MomentumVars.from_components(q_z, q_0)


def momentum_wavefunction(eta, q_z, q_0):
    """``pi^-1/2 exp{-(e^-2eta q_u^2 + e^2eta q_v^2)/2}``."""
    eta = as_eta(eta)
    q_z = np.asarray(q_z, dtype=float)
    q_0 = np.asarray(q_0, dtype=float)
    q_u = (q_0 - q_z) / _SQRT2
    q_v = (q_0 + q_z) / _SQRT2
    return np.exp(-0.5 * (math.exp(-2 * eta) * q_u ** 2 + math.exp(2 * eta) * q_v ** 2)) / math.sqrt(math.pi)


def momentum_grid(eta, qz_axis, q0_axis):
    qz_axis = np.asarray(qz_axis, dtype=float)
    q0_axis = np.asarray(q0_axis, dtype=float)
    qz, q0 = np.meshgrid(qz_axis, q0_axis, indexing="ij")
    return WaveGrid(qz_axis, q0_axis, momentum_wavefunction(eta, qz, q0), labels=("q_z", "q_0"))


def _transform_extent(eta):
    # psi falls below ~1e-16 of its peak at |u| = 8.6 e^|eta|; the square must
    # contain that radius along the diagonal
    return 8.6 * math.exp(abs(eta)) / _SQRT2 + 1.0


def fourier_transform_grid(eta, qz_axis, q0_axis, sign_z=1, sign_t=1, spacing=0.1):
    """Numerical transform of the boosted ground state.

    .. math:: \\tilde\\psi(q_z, q_0) = \\frac{1}{2\\pi}\\iint
              e^{i(s_z q_z z + s_t q_0 t)}\\, \\psi_\\eta(z, t)\\, dz\\, dt

    evaluated by the trapezoid rule on a uniform square grid. The kernel
    factorizes, so the double sum is two matrix products. For a Gaussian the
    trapezoid rule converges faster than any power of the spacing.
    """
    eta = as_eta(eta)
    L = _transform_extent(eta)
    npts = 2 * int(math.ceil(L / spacing)) + 1
    x = np.linspace(-L, L, npts)
    h = x[1] - x[0]
    zz, tt = np.meshgrid(x, x, indexing="ij")
    psi = boosted_wavefunction(0, eta, zz, tt)
    ez = np.exp(1j * sign_z * np.outer(np.asarray(qz_axis, dtype=float), x))
    et = np.exp(1j * sign_t * np.outer(np.asarray(q0_axis, dtype=float), x))
    return (ez @ psi @ et.T) * (h * h / (2.0 * math.pi))


@dataclass(frozen=True)
class FourierCheck:
    """Outcome of :func:`fourier_check`.

    ``convention`` is ``(s_z, s_t)`` for the kernel ``exp(i(s_z q_z z + s_t q_0 t))``;
    ``kernel_class`` is ``s_z * s_t``, the only part the squeeze orientation
    can detect (the two members of a class differ by complex conjugation).
    """

    eta: float
    convention: tuple
    kernel_class: int
    max_error: float
    errors: dict


def fourier_check(eta, qmax=3.0, nq=25, spacing=0.1):
    """Find the kernel sign convention that maps the space-time ground state onto
    the momentum wavefunction, and the max pointwise deviation it leaves.

    All four conventions ``exp(+-i q_z z +- i q_0 t)/(2 pi)`` are tried on a
    ``nq x nq`` grid over ``|q_z|, |q_0| <= qmax``. Ties (within 1e-12) are
    broken in the fixed order ``(+,+), (-,-), (+,-), (-,+)``.
    """
    eta = as_eta(eta)
    q = np.linspace(-qmax, qmax, nq)
    qz, q0 = np.meshgrid(q, q, indexing="ij")
    target = momentum_wavefunction(eta, qz, q0)
    errors = {}
    for sz, st in ((1, 1), (-1, -1), (1, -1), (-1, 1)):
        ft = fourier_transform_grid(eta, q, q, sz, st, spacing)
        errors[(sz, st)] = float(np.max(np.abs(ft - target)))
    best = min(errors.values())
    conv = next(c for c, e in errors.items() if e <= best + 1e-12)
    return FourierCheck(eta=eta, convention=conv, kernel_class=conv[0] * conv[1],
                        max_error=errors[conv], errors=errors)


def kinematics(energy, mass=PROTON_MASS_GEV):
    """Lorentz factor and rapidity for a particle of given energy and mass (GeV)."""
    energy = float(energy)
    mass = float(mass)
    if not mass > 0:
        raise InvariantError(f"mass must be positive, got {mass}", "mass > 0")
    if energy < mass:
        raise InvariantError(f"energy {energy} is below the rest mass {mass}", "energy >= mass")
    gamma = energy / mass
    # arccosh(gamma) = log(gamma + sqrt((gamma-1)(gamma+1))), stable near gamma = 1
    eta = math.log(gamma + math.sqrt((gamma - 1.0) * (gamma + 1.0)))
    return BoostKinematics(energy=energy, mass=mass, gamma=gamma, eta=eta)


def axis_widths(eta):
    """Light-cone axis factors ``(e^eta, e^-eta)`` for the expanded and contracted axes."""
    eta = as_eta(eta)
    if eta < 0:
        raise InvariantError(f"eta must be >= 0, got {eta}", "eta >= 0")
    return math.exp(eta), math.exp(-eta)


def decoherence_ratio(k):
    """Interaction time over oscillator period, ``e^-2eta``.

    ``k`` is a :class:`BoostKinematics` or a bare rapidity.
    """
    eta = k.eta if isinstance(k, BoostKinematics) else as_eta(k)
    if eta < 0:
        raise InvariantError(f"eta must be >= 0, got {eta}", "eta >= 0")
    return math.exp(-2.0 * eta)


def second_moment_matrix(grid):
    """Covariance matrix of ``|values|^2`` over a :class:`WaveGrid`.

    The grid must be centred at zero and wide enough for the tails to vanish;
    the trapezoid sums are then spectrally accurate.
    """
    a, b = grid.mesh()
    rho = np.abs(grid.values) ** 2
    total = rho.sum()
    m = np.empty((2, 2))
    for (i, x), (j, y) in itertools.product(enumerate((a, b)), repeat=2):
        m[i, j] = float(np.sum(x * y * rho) / total)
    return m
