"""Oracle suites run by ``covosc selftest``.

Each check pits a closed form against an independent numerical route and
records the deviation next to its tolerance.
"""

import math

import numpy as np

from . import coupled_osc, covariant, entangle, hermite, parton


def _check(name, value, tol):
    value = float(value)
    return {"name": name, "value": value, "tolerance": tol, "passed": bool(value < tol)}


def check_quadrature():
    rule = hermite.gauss_hermite(64)
    err = abs(rule.integrate(lambda x: x * x) - math.sqrt(math.pi) / 2)
    return [_check("gauss_hermite N=64 second moment", err, 1e-14)]


def check_orthonormality():
    kmax = 30
    g = hermite.OscillatorBasis(kmax).gram(hermite.gauss_hermite(2 * kmax + 8))
    return [_check("oscillator basis orthonormality kmax=30", np.max(np.abs(g - np.eye(kmax + 1))), 1e-10)]


def check_normal_modes(samples=100, seed=0):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        A = rng.uniform(0.1, 10.0)
        C = rng.uniform(-0.99, 0.99) * A
        spec = coupled_osc.diagonalize(coupled_osc.CoupledHamiltonian(1.0, A, C))
        ev = np.linalg.eigvalsh([[A, C], [C, A]])
        got = sorted([spec.K * math.exp(-2 * spec.eta), spec.K * math.exp(2 * spec.eta)])
        worst = max(worst, float(np.max(np.abs(np.array(got) - ev) / ev)))
    return [_check("normal modes K e^(-+2eta) vs eigenvalues A+-C", worst, 1e-10)]


def check_schmidt():
    return [_check(f"Schmidt projection eta={eta}", entangle.verify_expansion(eta, 12), 1e-8)
            for eta in (0.2, 0.5, 1.0)]


def check_overlap():
    eta = math.atanh(0.6)
    m = covariant.overlap_matrix(8, eta)
    expected = np.diag([covariant.overlap_closed_form(n, n, eta) for n in range(9)])
    return [_check("overlap matrix beta=0.6 vs (1-beta^2)^((n+1)/2)", np.max(np.abs(m - expected)), 1e-8)]


def check_purity():
    out = []
    for eta in (0.0, 0.5, 1.0, 2.0):
        err = abs(entangle.purity(eta) - entangle.purity_series(eta))
        out.append(_check(f"purity closed form vs series eta={eta}", err, 1e-12))
    return out


def check_entropy():
    out = [_check("entropy at eta=0", abs(entangle.entropy(0.0)), 1e-300)]
    for eta in (0.25, 1.0, 2.0):
        s = entangle.entropy(eta)
        series = entangle.entropy_series(eta)
        thermal = entangle.thermal_entropy(entangle.matched_thermal(eta))
        err = max(abs(s - series), abs(s - thermal), abs(series - thermal))
        out.append(_check(f"entropy three routes eta={eta}", err, 1e-10))
    return out


def check_pde():
    worst = max(covariant.pde_residual(n, eta) for n in range(4) for eta in (0.0, 0.7, 1.4))
    return [_check("oscillator equation residual lambda=n", worst, 1e-10)]


def check_light_cone(samples=10_000, seed=1):
    rng = np.random.default_rng(seed)
    z, t = rng.normal(scale=2.0, size=(2, samples))
    eta = rng.uniform(-3, 3, size=samples)
    lc = covariant.to_light_cone(z, t)
    lcb = covariant.to_light_cone(*covariant.boost_coords(z, t, eta))
    return [_check("light-cone product invariance under boosts", np.max(np.abs(lcb.u * lcb.v - lc.u * lc.v)), 1e-12)]


def check_fourier():
    out = []
    classes = set()
    for eta in (0.3, 0.8, 1.5):
        fc = parton.fourier_check(eta)
        classes.add(fc.kernel_class)
        out.append(_check(f"Fourier transform vs momentum wavefunction eta={eta}", fc.max_error, 1e-6))
    out.append(_check("Fourier kernel class stable", float(len(classes) - 1), 0.5))
    return out


def check_parton():
    k = parton.kinematics(900.0, parton.PROTON_MASS_GEV)
    ratio = parton.decoherence_ratio(k)
    oracle = math.exp(-2 * math.acosh(900.0 / parton.PROTON_MASS_GEV))
    in_range = 0.0 if 1e-7 <= ratio <= 1e-6 else 1.0
    return [_check("900 GeV ratio vs arccosh oracle", abs(ratio - oracle) / oracle, 1e-12),
            _check("900 GeV ratio in [1e-7, 1e-6]", in_range, 0.5)]


def check_reduced_density():
    eta = 1.0
    axis = np.linspace(-6 * math.e, 6 * math.e, 401)
    rho = entangle.reduce_over_t(eta, axis)
    dev = np.max(np.abs(rho.matrix - entangle.fock_reconstruction(eta, axis)))
    return [_check("partial trace vs Fock reconstruction eta=1", dev, 1e-7),
            _check("partial trace unit trace eta=1", abs(rho.trace() - 1.0), 1e-9)]


SUITES = (
    check_quadrature,
    check_orthonormality,
    check_normal_modes,
    check_schmidt,
    check_overlap,
    check_purity,
    check_entropy,
    check_pde,
    check_light_cone,
    check_fourier,
    check_parton,
    check_reduced_density,
)


def run():
    """Run every suite; returns ``(all_passed, results)``."""
    results = [r for suite in SUITES for r in suite()]
    return all(r["passed"] for r in results), results
