"""Schmidt expansion, partial trace, purity and entropy of the squeezed Gaussian.

The two-variable ground state (coupled oscillators in ``x1, x2`` or the
covariant oscillator in ``z, t``) expands as

.. math:: \\psi_\\eta = \\frac{1}{\\cosh\\eta}\\sum_k (\\tanh\\eta)^k \\phi_k\\phi_k .

Tracing out the second variable leaves a density operator diagonal in the
oscillator basis with probabilities ``p_k = tanh^2k(eta) / cosh^2(eta)``.
Entropies are dimensionless (units of Boltzmann's constant).
"""

from dataclasses import dataclass
import math

import numpy as np

from .coupled_osc import coupled_ground_state
from .covariant import as_eta
from .errors import AxisTooSmallError, InvariantError, QuadratureOrderError
from .hermite import (eigenfunction_table, gauss_hermite,
                      hermite_function_poly_table, lightcone_product_rule)

__all__ = [
    "SchmidtSpectrum",
    "ReducedDensity",
    "ThermalParameter",
    "schmidt",
    "adaptive_kmax",
    "verify_expansion",
    "expansion_projections",
    "pure_density",
    "idempotency_defect",
    "reduce_over_t",
    "reduced_axis",
    "fock_density",
    "fock_reconstruction",
    "purity",
    "purity_series",
    "entropy",
    "entropy_series",
    "thermal_entropy",
    "eta_to_thermal",
    "thermal_to_eta",
    "matched_thermal",
]

TAIL_TOL = 1e-14
KMAX_CAP = 10_000


@dataclass(frozen=True, eq=False)
class SchmidtSpectrum:
    """Truncated Schmidt coefficients ``c_k`` and probabilities ``p_k = c_k^2``.

    ``tail`` is the probability mass beyond ``kmax``, ``tanh^(2 kmax + 2)(eta)``.
    """

    eta: float
    kmax: int
    coeffs: np.ndarray
    probs: np.ndarray
    tail: float


def schmidt(eta, kmax):
    """Coefficients ``tanh^k(eta)/cosh(eta)`` for ``k = 0..kmax``."""
    eta = as_eta(eta)
    if kmax < 0:
        raise InvariantError(f"kmax must be >= 0, got {kmax}", "kmax >= 0")
    t = math.tanh(eta)
    k = np.arange(kmax + 1)
    if eta == 0.0:
        coeffs = (k == 0).astype(float)
    else:
        coeffs = t ** k / math.cosh(eta)
    return SchmidtSpectrum(eta=eta, kmax=kmax, coeffs=coeffs, probs=coeffs ** 2,
                           tail=t ** (2 * kmax + 2))


def adaptive_kmax(eta, tol=TAIL_TOL, cap=KMAX_CAP):
    """Smallest ``k`` with ``tanh^(2k+2)(eta) < tol``, capped at ``cap``."""
    t2 = math.tanh(abs(as_eta(eta))) ** 2
    if t2 == 0.0:
        return 0
    if t2 >= 1.0:
        return cap
    k = math.ceil(math.log(tol) / math.log(t2)) - 1
    while t2 ** (k + 1) >= tol:
        k += 1
    return int(min(max(k, 0), cap))


def expansion_projections(eta, kmax, rule=None):
    """Matrix ``<phi_j(x1) phi_k(x2), psi_eta>`` for ``j, k <= kmax``.

    Uses a 2-D Gauss-Hermite rule aligned with the normal coordinates, in
    which the product of the oscillator envelopes and ``psi_eta`` is a
    separable Gaussian.
    """
    eta = as_eta(eta)
    need = 2 * kmax + 16
    if rule is None:
        rule = gauss_hermite(need)
    elif rule.order < need:
        raise QuadratureOrderError(f"quadrature order {rule.order} is below the required {need}",
                                   required=need, given=rule.order)
    a1 = 0.5 * (1.0 + math.exp(-2 * eta))
    a2 = 0.5 * (1.0 + math.exp(2 * eta))
    x1, x2, w = lightcone_product_rule(rule, a1, a2)
    h1 = hermite_function_poly_table(kmax, x1)
    h2 = hermite_function_poly_table(kmax, x2)
    return (h1 * (w / math.sqrt(math.pi))) @ h2.T


def verify_expansion(eta, kmax, basis=None, rule=None):
    """Max deviation of the projections from ``c_k delta_jk``."""
    if basis is not None and kmax > basis.kmax:
        raise InvariantError(f"kmax={kmax} exceeds basis kmax={basis.kmax}", "kmax <= basis.kmax")
    proj = expansion_projections(eta, kmax, rule)
    return float(np.max(np.abs(proj - np.diag(schmidt(eta, kmax).coeffs))))


def pure_density(eta, z, t, zp, tp):
    """``rho(z,t; z',t') = psi_eta(z,t) psi_eta(z',t')`` (real wavefunction)."""
    eta = as_eta(eta)
    return coupled_ground_state(eta, z, t) * coupled_ground_state(eta, zp, tp)


def idempotency_defect(eta, npts=80, rule=None):
    """Max ``|rho^2 - rho|`` over a set of sample points.

    ``rho^2`` is formed by integrating over the intermediate ``(z'', t'')``
    with an ``npts``-point rule per axis matched to ``|psi_eta|^2``.
    """
    eta = as_eta(eta)
    rule = gauss_hermite(npts) if rule is None else rule
    zi, ti, w = lightcone_product_rule(rule, math.exp(-2 * eta), math.exp(2 * eta))
    # |psi|^2 = exp(-(a_u u^2 + a_v v^2))/pi; weights absorb that envelope
    env = coupled_ground_state(eta, zi, ti) ** 2
    rng = np.random.default_rng(0)
    pts = rng.uniform(-2.0, 2.0, size=(16, 4))
    worst = 0.0
    for z, t, zp, tp in pts:
        integrand = pure_density(eta, z, t, zi, ti) * pure_density(eta, zi, ti, zp, tp)
        rho2 = float(np.dot(w, integrand / env) / math.pi)
        worst = max(worst, abs(rho2 - float(pure_density(eta, z, t, zp, tp))))
    return worst


@dataclass(frozen=True, eq=False)
class ReducedDensity:
    """Reduced density operator, Fock-diagonal or sampled on a position axis."""

    representation: str
    probs: np.ndarray = None
    axis: np.ndarray = None
    matrix: np.ndarray = None

    def __post_init__(self):
        if self.representation not in ("fock", "grid"):
            raise InvariantError(f"unknown representation {self.representation!r}",
                                 "representation in {'fock', 'grid'}")
        if self.representation == "fock" and self.probs is None:
            raise InvariantError("fock representation needs probs", "probs given")
        if self.representation == "grid" and (self.axis is None or self.matrix is None):
            raise InvariantError("grid representation needs axis and matrix", "axis and matrix given")

    @property
    def spacing(self):
        return float(self.axis[1] - self.axis[0])

    def trace(self):
        if self.representation == "fock":
            return float(np.sum(self.probs))
        return float(np.sum(np.diag(self.matrix)) * self.spacing)

    def eigenvalues(self):
        """Spectrum of the operator; on a grid, of ``rho * dz``."""
        if self.representation == "fock":
            return np.sort(np.asarray(self.probs))[::-1]
        return np.linalg.eigvalsh(self.matrix * self.spacing)[::-1]

    def purity(self):
        if self.representation == "fock":
            return float(np.sum(np.asarray(self.probs) ** 2))
        return float(np.sum(self.matrix ** 2) * self.spacing ** 2)

    def is_symmetric(self, tol=1e-12):
        if self.representation == "fock":
            return True
        return bool(np.max(np.abs(self.matrix - self.matrix.T)) <= tol * np.max(np.abs(self.matrix)))


def fock_density(eta, kmax=None):
    """Fock-diagonal reduced density with an adaptive truncation."""
    kmax = adaptive_kmax(eta) if kmax is None else kmax
    return ReducedDensity("fock", probs=schmidt(eta, kmax).probs)


def reduced_axis(eta, npts=401):
    """Default axis ``|z| <= 6 e^|eta|`` with ``npts`` points."""
    half = 6.0 * math.exp(abs(as_eta(eta)))
    return np.linspace(-half, half, npts)


def _z_width(eta):
    # standard deviation of z under |psi_eta|^2: sqrt(cosh(2 eta)/2)
    return math.sqrt(0.5 * math.cosh(2 * eta))


def reduce_over_t(eta, axis=None, rule=None):
    """Trace the pure density over the time-separation variable.

    Computes ``rho(z, z') = \\int psi_eta(z, t) psi_eta(z', t) dt`` for every
    pair of axis points. For each pair the integrand is a Gaussian in ``t``;
    a Gauss-Hermite rule is shifted and scaled onto it and the literal
    integrand is evaluated at the nodes.

    Raises
    ------
    AxisTooSmallError
        If the axis does not reach three standard deviations of the
        reduced distribution on both sides (six widths in total).
    """
    eta = as_eta(eta)
    axis = reduced_axis(eta) if axis is None else np.asarray(axis, dtype=float)
    if axis.ndim != 1 or axis.size < 2 or np.any(np.diff(axis) <= 0):
        raise InvariantError("axis must be 1-D and strictly increasing", "strictly increasing axis")
    d = np.diff(axis)
    if not np.allclose(d, d[0], rtol=1e-9, atol=0.0):
        raise InvariantError("axis must be uniformly spaced", "uniform spacing")
    need = 3.0 * _z_width(eta)
    have = min(-axis[0], axis[-1])
    if have < need:
        raise AxisTooSmallError(f"axis half-width {have:.4g} is below the required {need:.4g}",
                                required=need, given=float(have))
    rule = gauss_hermite(24) if rule is None else rule
    c2 = math.cosh(2 * eta)
    s2 = math.sinh(2 * eta)
    z = axis[:, None, None]
    zp = axis[None, :, None]
    # psi(z,t) psi(z',t) ~ exp(-cosh(2eta) t^2 + sinh(2eta)(z+z') t): centre and scale
    centre = s2 * (z + zp) / (2.0 * c2)
    scale = 1.0 / math.sqrt(c2)
    s = rule.nodes[None, None, :]
    t = centre + scale * s
    integrand = coupled_ground_state(eta, z, t) * coupled_ground_state(eta, zp, t)
    mat = scale * np.sum(rule.weights * integrand * np.exp(s * s), axis=-1)
    mat = 0.5 * (mat + mat.T)
    return ReducedDensity("grid", axis=axis, matrix=mat)


def fock_reconstruction(eta, axis, kmax=None):
    """``sum_k p_k phi_k(z) phi_k(z')`` on ``axis``."""
    eta = as_eta(eta)
    kmax = adaptive_kmax(eta) if kmax is None else kmax
    p = schmidt(eta, kmax).probs
    phi = eigenfunction_table(kmax, np.asarray(axis, dtype=float))
    return (phi.T * p) @ phi


def purity(eta):
    """``Tr rho^2 = 1 / cosh(2 eta)``."""
    return 1.0 / math.cosh(2 * as_eta(eta))


def purity_series(eta, kmax=None):
    """Truncated ``cosh^-4(eta) sum_k tanh^4k(eta)``."""
    eta = abs(as_eta(eta))
    kmax = adaptive_kmax(eta) if kmax is None else kmax
    k = np.arange(kmax + 1)
    return float(np.sum(math.tanh(eta) ** (4 * k)) / math.cosh(eta) ** 4)


def entropy(eta):
    """Von Neumann entropy ``2[cosh^2 ln cosh - sinh^2 ln sinh]`` of the reduced state.

    Depends on ``|eta|`` only; returns exactly 0 at ``eta = 0``.
    """
    eta = abs(as_eta(eta))
    if eta == 0.0:
        return 0.0
    ch, sh = math.cosh(eta), math.sinh(eta)
    return 2.0 * (ch * ch * math.log(ch) - sh * sh * math.log(sh))


def entropy_series(eta, kmax=None):
    """``-sum_k p_k ln p_k`` over the Schmidt probabilities, in log space."""
    eta = abs(as_eta(eta))
    if eta == 0.0:
        return 0.0
    kmax = adaptive_kmax(eta) if kmax is None else kmax
    k = np.arange(kmax + 1)
    log_t2 = 2.0 * math.log(math.tanh(eta))
    log_p = -2.0 * math.log(math.cosh(eta)) + k * log_t2
    p = np.exp(log_p)
    return float(-np.sum(p * log_p))


@dataclass(frozen=True)
class ThermalParameter:
    """Dimensionless ratio ``x = hbar omega / (k T) > 0``."""

    x: float

    def __post_init__(self):
        if not self.x > 0:
            raise InvariantError(f"hbar*omega/kT must be positive, got {self.x}", "x > 0")


def _as_x(x):
    return x.x if isinstance(x, ThermalParameter) else ThermalParameter(float(x)).x


def thermal_entropy(x):
    """Entropy of an oscillator in equilibrium, ``x/(e^x - 1) - ln(1 - e^-x)``."""
    x = _as_x(x)
    return x / math.expm1(x) - math.log(-math.expm1(-x))


def _neg_log_tanh(eta):
    # -ln tanh(eta) without cancellation for large eta
    q = math.exp(-2.0 * eta)
    return math.log1p(q) - math.log1p(-q)


def eta_to_thermal(eta):
    """``x = -ln tanh(eta)``; only defined for ``eta > 0``."""
    eta = as_eta(eta)
    if not eta > 0:
        raise InvariantError(f"eta must be positive for the temperature map, got {eta}", "eta > 0")
    return ThermalParameter(_neg_log_tanh(eta))


def thermal_to_eta(x):
    """Inverse of :func:`eta_to_thermal`."""
    return math.atanh(math.exp(-_as_x(x)))


def matched_thermal(eta):
    """Temperature ratio whose thermal occupations equal the Schmidt probabilities.

    The reduced state has ``p_k = (1 - q) q^k`` with ``q = tanh^2(eta)``, so the
    matching Boltzmann factor is ``exp(-x) = tanh^2(eta)``, i.e.
    ``x = -2 ln tanh(eta)``. ``thermal_entropy(matched_thermal(eta))`` equals
    ``entropy(eta)``; with :func:`eta_to_thermal` it does not.
    """
    eta = as_eta(eta)
    if not eta > 0:
        raise InvariantError(f"eta must be positive for the temperature map, got {eta}", "eta > 0")
    return ThermalParameter(2.0 * _neg_log_tanh(eta))
