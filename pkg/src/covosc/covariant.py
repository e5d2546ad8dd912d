"""Lorentz boosts as light-cone squeezes and covariant oscillator wavefunctions.

Coordinates are the longitudinal separation ``z`` and the time separation ``t``
(transverse directions are dropped). A boost of rapidity ``eta`` acts as

.. math:: z' = z\\cosh\\eta + t\\sinh\\eta, \\qquad t' = z\\sinh\\eta + t\\cosh\\eta,

which in light-cone variables ``u = (z+t)/sqrt(2)``, ``v = (z-t)/sqrt(2)`` is the
squeeze ``u -> e^eta u``, ``v -> e^-eta v``.

Boosted wavefunctions are evaluated with the inverse substitution
``z -> z cosh eta - t sinh eta``, ``t -> t cosh eta - z sinh eta`` applied to the
rest-frame function; that pairing is what makes the boosted ground state equal
``pi^-1/2 exp{-(e^-2eta u^2 + e^2eta v^2)/2}``. Every state carries its
normalization constant.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .errors import AxisTooSmallError, InvariantError, QuadratureOrderError
from .hermite import (gauss_hermite, hermite_function_poly_table, hermite_norm,
                      hermite_poly_table, lightcone_product_rule, OscillatorBasis)

__all__ = [
    "SqueezeParameter",
    "LightConeVector",
    "WaveGrid",
    "as_eta",
    "boost_coords",
    "to_light_cone",
    "from_light_cone",
    "light_cone_squeeze",
    "rest_wavefunction",
    "boosted_wavefunction",
    "boosted_ground_lightcone",
    "boosted_ground_sumdiff",
    "wavefunction_grid",
    "make_grid",
    "overlap",
    "overlap_closed_form",
    "overlap_matrix",
    "norm",
    "pde_residual",
]

_SQRT2 = math.sqrt(2.0)
_MIN_EXTRA_NODES = 16


@dataclass(frozen=True)
class SqueezeParameter:
    """Boost rapidity / oscillator coupling ``eta``; ``beta = tanh(eta)``."""

    eta: float

    def __post_init__(self):
        if not math.isfinite(self.eta):
            raise InvariantError(f"eta must be finite, got {self.eta}", "beta in (-1, 1)")

    @property
    def beta(self):
        return math.tanh(self.eta)

    @classmethod
    def from_beta(cls, beta):
        if not -1.0 < beta < 1.0:
            raise InvariantError(f"beta must lie in (-1, 1), got {beta}", "beta in (-1, 1)")
        return cls(math.atanh(beta))

    def __float__(self):
        return float(self.eta)


def as_eta(eta):
    """Accept a bare float or a :class:`SqueezeParameter`."""
    if isinstance(eta, SqueezeParameter):
        return eta.eta
    eta = float(eta)
    if not math.isfinite(eta):
        raise InvariantError(f"eta must be finite, got {eta}", "beta in (-1, 1)")
    return eta


@dataclass(frozen=True)
class LightConeVector:
    u: float
    v: float

    def to_zt(self):
        return from_light_cone(self.u, self.v)


@dataclass(frozen=True, eq=False)
class WaveGrid:
    """Amplitudes sampled on a uniform ``(z, t)`` grid.

    ``values[i, j]`` is the amplitude at ``(z_axis[i], t_axis[j])``. The same
    container holds momentum grids with ``(q_z, q_0)`` in place of ``(z, t)``.
    """

    z_axis: np.ndarray
    t_axis: np.ndarray
    values: np.ndarray
    normalized: bool = False
    labels: tuple = field(default=("z", "t"))

    def __post_init__(self):
        z = np.asarray(self.z_axis, dtype=float)
        t = np.asarray(self.t_axis, dtype=float)
        vals = np.asarray(self.values)
        for name, ax in (("z_axis", z), ("t_axis", t)):
            if ax.ndim != 1 or ax.size < 2:
                raise InvariantError(f"{name} must be 1-D with at least two points", "axis shape")
            d = np.diff(ax)
            if np.any(d <= 0):
                raise InvariantError(f"{name} must be strictly increasing", "strictly increasing")
            if not np.allclose(d, d[0], rtol=1e-9, atol=0.0):
                raise InvariantError(f"{name} must be uniformly spaced", "uniform spacing")
        if vals.shape != (z.size, t.size):
            raise InvariantError(f"values shape {vals.shape} does not match axes ({z.size}, {t.size})",
                                 "values.shape == (len(z_axis), len(t_axis))")
        object.__setattr__(self, "z_axis", z)
        object.__setattr__(self, "t_axis", t)
        object.__setattr__(self, "values", vals)
        if self.normalized:
            n = self.norm()
            if abs(n - 1.0) > 1e-6:
                raise InvariantError(f"grid tagged normalized but norm is {n:.9g}", "norm == 1 +- 1e-6")

    @property
    def dz(self):
        return self.z_axis[1] - self.z_axis[0]

    @property
    def dt(self):
        return self.t_axis[1] - self.t_axis[0]

    def mesh(self):
        return np.meshgrid(self.z_axis, self.t_axis, indexing="ij")

    def norm(self):
        """Riemann sum of ``|values|^2``; spectrally accurate for decaying Gaussians."""
        return float(np.sum(np.abs(self.values) ** 2) * self.dz * self.dt)


def _eta_array(eta):
    # coordinate maps broadcast over an array of rapidities
    if isinstance(eta, SqueezeParameter) or np.ndim(eta) == 0:
        return as_eta(eta)
    eta = np.asarray(eta, dtype=float)
    if not np.all(np.isfinite(eta)):
        raise InvariantError("eta must be finite", "beta in (-1, 1)")
    return eta


def boost_coords(z, t, eta):
    """Apply the boost matrix ``[[cosh, sinh], [sinh, cosh]]`` to ``(z, t)``.

    ``eta`` may be an array broadcasting against ``z`` and ``t``.
    """
    eta = _eta_array(eta)
    c, s = np.cosh(eta), np.sinh(eta)
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    return c * z + s * t, s * z + c * t


def to_light_cone(z, t):
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    return LightConeVector((z + t) / _SQRT2, (z - t) / _SQRT2)


def from_light_cone(u, v):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return (u + v) / _SQRT2, (u - v) / _SQRT2


def light_cone_squeeze(lc, eta):
    """Boost in light-cone form: ``u' = e^eta u``, ``v' = e^-eta v``."""
    eta = _eta_array(eta)
    return LightConeVector(np.exp(eta) * np.asarray(lc.u, dtype=float),
                           np.exp(-eta) * np.asarray(lc.v, dtype=float))


def _inverse_boost(z, t, eta):
    c, s = math.cosh(eta), math.sinh(eta)
    return c * z - s * t, c * t - s * z


def rest_wavefunction(n, z, t):
    """``C_n H_n(z) exp{-(z^2 + t^2)/2}`` with ``C_n = (2^n n! pi)^(-1/2)``.

    Excitations along ``z`` only; the time-separation variable stays in its
    ground state. Equivalent to ``phi_n(z) phi_0(t)``.
    """
    if n < 0:
        raise InvariantError(f"excitation number must be >= 0, got {n}", "n >= 0")
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    hz = hermite_function_poly_table(n, z)[n]
    return hz * math.pi ** -0.25 * np.exp(-0.5 * (z * z + t * t))


def boosted_wavefunction(n, eta, z, t):
    """Rest wavefunction evaluated at the inversely boosted arguments."""
    eta = as_eta(eta)
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    zp, tp = _inverse_boost(z, t, eta)
    return rest_wavefunction(n, zp, tp)


def boosted_ground_lightcone(eta, z, t):
    """Boosted ground state in light-cone form ``exp{-(e^-2eta u^2 + e^2eta v^2)/2}/sqrt(pi)``."""
    eta = as_eta(eta)
    lc = to_light_cone(z, t)
    return np.exp(-0.5 * (math.exp(-2 * eta) * lc.u ** 2 + math.exp(2 * eta) * lc.v ** 2)) / math.sqrt(math.pi)


def boosted_ground_sumdiff(eta, z, t):
    """Same function in ``(z + t, z - t)`` form."""
    eta = as_eta(eta)
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    return np.exp(-0.25 * (math.exp(-2 * eta) * (z + t) ** 2
                           + math.exp(2 * eta) * (z - t) ** 2)) / math.sqrt(math.pi)


def make_grid(extent=6.0, spacing=0.05):
    """Symmetric uniform axis ``[-extent, extent]`` with at most ``spacing`` between points."""
    npts = int(math.ceil(2 * extent / spacing - 1e-9)) + 1
    return np.linspace(-extent, extent, npts)


def wavefunction_grid(n, eta, z_axis, t_axis):
    """Sample the boosted wavefunction on a ``(z, t)`` grid."""
    z_axis = np.asarray(z_axis, dtype=float)
    t_axis = np.asarray(t_axis, dtype=float)
    zz, tt = np.meshgrid(z_axis, t_axis, indexing="ij")
    return WaveGrid(z_axis, t_axis, boosted_wavefunction(n, eta, zz, tt))


def _check_rule(rule, need):
    if rule is None:
        return gauss_hermite(need)
    if rule.order < need:
        raise QuadratureOrderError(
            f"quadrature order {rule.order} is below the required {need}", required=need, given=rule.order)
    return rule


def overlap_closed_form(n, m, eta):
    """``(1 - beta^2)^((n+1)/2) delta_nm`` with ``beta = tanh(eta)``.

    This is the value for unit-normalized states. The extra factor
    ``sqrt(1 - beta^2) = 1/cosh(eta)`` already appears for ``n = m = 0``: two
    normalized Gaussians of different shape overlap by less than one.
    """
    if n != m:
        return 0.0
    return (1.0 / math.cosh(as_eta(eta))) ** (n + 1)


def overlap(n, m, eta, basis=None, rule=None):
    """Inner product of the rest state ``n`` with the boosted state ``m``.

    Computed by a 2-D Gauss-Hermite rule aligned with the light-cone axes of
    the Gaussian envelope, so the result is exact up to rounding once the
    rule has at least ``2*max(n, m) + 16`` nodes.

    Raises
    ------
    InvariantError
        If ``n`` or ``m`` exceeds ``basis.kmax``.
    QuadratureOrderError
        If ``rule`` is too small.
    """
    eta = as_eta(eta)
    if n < 0 or m < 0:
        raise InvariantError("excitation numbers must be >= 0", "n, m >= 0")
    if basis is None:
        basis = OscillatorBasis(max(n, m))
    if max(n, m) > basis.kmax:
        raise InvariantError(f"index {max(n, m)} exceeds basis kmax={basis.kmax}", "n, m <= kmax")
    rule = _check_rule(rule, 2 * max(n, m) + _MIN_EXTRA_NODES)
    # envelope exp(-(z^2+t^2)/2 - (z'^2+t'^2)/2) in light-cone variables
    a_u = 0.5 * (1.0 + math.exp(-2 * eta))
    a_v = 0.5 * (1.0 + math.exp(2 * eta))
    z, t, w = lightcone_product_rule(rule, a_u, a_v)
    zp, tp = _inverse_boost(z, t, eta)
    h0 = math.pi ** -0.25
    f = hermite_function_poly_table(n, z)[n] * hermite_function_poly_table(m, zp)[m] * h0 ** 2
    return float(np.dot(w, f))


def overlap_matrix(nmax, eta, rule=None):
    """Overlaps for all ``n, m <= nmax`` sharing one quadrature grid."""
    eta = as_eta(eta)
    rule = _check_rule(rule, 2 * nmax + _MIN_EXTRA_NODES)
    a_u = 0.5 * (1.0 + math.exp(-2 * eta))
    a_v = 0.5 * (1.0 + math.exp(2 * eta))
    z, t, w = lightcone_product_rule(rule, a_u, a_v)
    zp, _ = _inverse_boost(z, t, eta)
    hz = hermite_function_poly_table(nmax, z)
    hzp = hermite_function_poly_table(nmax, zp)
    return (hz * (w / math.sqrt(math.pi))) @ hzp.T


def norm(n, eta, rule=None):
    """``\\iint |psi^n_eta|^2 dz dt`` by light-cone-adapted quadrature."""
    eta = as_eta(eta)
    rule = _check_rule(rule, 2 * n + _MIN_EXTRA_NODES)
    z, t, w = lightcone_product_rule(rule, math.exp(-2 * eta), math.exp(2 * eta))
    zp, _ = _inverse_boost(z, t, eta)
    h = hermite_function_poly_table(n, zp)[n]
    return float(np.dot(w, h * h) / math.sqrt(math.pi))


def _profile_derivs(n, x):
    """``g, g', g''`` for ``g(x) = C_n H_n(x) exp(-x^2/2)``, using ``H_n' = 2n H_{n-1}``."""
    H = hermite_poly_table(n, x)
    Hn = H[n]
    Hn1 = H[n - 1] if n >= 1 else np.zeros_like(x)
    Hn2 = H[n - 2] if n >= 2 else np.zeros_like(x)
    c = hermite_norm(n) * np.exp(-0.5 * x * x)
    g = c * Hn
    g1 = c * (2 * n * Hn1 - x * Hn)
    g2 = c * (4 * n * (n - 1) * Hn2 - 4 * n * x * Hn1 + (x * x - 1.0) * Hn)
    return g, g1, g2


def _operator_analytic(n, eta, z, t):
    c, s = math.cosh(eta), math.sinh(eta)
    zp, tp = _inverse_boost(z, t, eta)
    a, a1, a2 = _profile_derivs(n, zp)
    b, b1, b2 = _profile_derivs(0, tp)
    psi = a * b
    # chain rule with dz'/dz = c, dt'/dz = -s, dz'/dt = -s, dt'/dt = c
    d2z = c * c * a2 * b - 2 * c * s * a1 * b1 + s * s * a * b2
    d2t = s * s * a2 * b - 2 * c * s * a1 * b1 + c * c * a * b2
    return psi, 0.5 * ((z * z - t * t) * psi - d2z + d2t)


def _operator_fd(n, eta, z, t, h):
    def f(zz, tt):
        return boosted_wavefunction(n, eta, zz, tt)

    psi = f(z, t)
    d2z = (f(z + h, t) - 2 * psi + f(z - h, t)) / (h * h)
    d2t = (f(z, t + h) - 2 * psi + f(z, t - h)) / (h * h)
    return psi, 0.5 * ((z * z - t * t) * psi - d2z + d2t)


def pde_residual(n, eta, grid=None, lam=None, method="analytic", step=1e-4):
    """Relative residual of ``1/2[(z^2 - t^2) - d^2/dz^2 + d^2/dt^2] psi = lam psi``.

    Returns ``max|Op psi - lam psi| / max|psi|`` over the grid, with the
    default eigenvalue ``lam = n``. ``method="fd"`` replaces the analytic
    derivatives by central differences of step ``step``; expect ~1e-7
    agreement there rather than machine precision.

    ``grid`` may be a :class:`WaveGrid` or ``None`` for the default
    ``|z|, |t| <= 6`` at spacing 0.05.
    """
    eta = as_eta(eta)
    if n < 0:
        raise InvariantError(f"excitation number must be >= 0, got {n}", "n >= 0")
    if grid is None:
        ax = make_grid()
        zz, tt = np.meshgrid(ax, ax, indexing="ij")
    else:
        for ax in (grid.z_axis, grid.t_axis):
            if ax[0] > -6.0 + 1e-12 or ax[-1] < 6.0 - 1e-12:
                raise AxisTooSmallError("residual grid must cover |z|, |t| <= 6", required=6.0,
                                        given=float(min(-ax[0], ax[-1])))
            if ax[1] - ax[0] > 0.05 + 1e-12:
                raise AxisTooSmallError("residual grid spacing must be <= 0.05", required=0.05,
                                        given=float(ax[1] - ax[0]))
        zz, tt = grid.mesh()
    lam = n if lam is None else lam
    if method == "analytic":
        psi, op = _operator_analytic(n, eta, zz, tt)
    elif method == "fd":
        psi, op = _operator_fd(n, eta, zz, tt, step)
    else:
        raise InvariantError(f"unknown method {method!r}", "method in {'analytic', 'fd'}")
    return float(np.max(np.abs(op - lam * psi)) / np.max(np.abs(psi)))
