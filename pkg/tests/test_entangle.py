import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from covosc.entangle import (ReducedDensity, ThermalParameter, adaptive_kmax, entropy, entropy_series,
                             eta_to_thermal, expansion_projections, fock_density, fock_reconstruction,
                             idempotency_defect, matched_thermal, pure_density, purity, purity_series,
                             reduce_over_t, reduced_axis, schmidt, thermal_entropy, thermal_to_eta,
                             verify_expansion)
from covosc.errors import AxisTooSmallError, InvariantError, QuadratureOrderError
from covosc.hermite import OscillatorBasis, eigenfunction, gauss_hermite


def test_schmidt_disentangled():
    sp = schmidt(0.0, 5)
    assert sp.coeffs.tolist() == [1, 0, 0, 0, 0, 0]
    assert sp.tail == 0.0


def test_schmidt_ln2():
    sp = schmidt(math.log(2), 10)
    assert np.allclose(sp.coeffs, 0.8 * 0.6 ** np.arange(11), rtol=1e-14)
    assert np.all(sp.probs > 0)


@pytest.mark.parametrize("eta", [0.1, 0.7, 1.5, -1.0])
def test_schmidt_sum_geometric(eta):
    sp = schmidt(eta, 200)
    assert sp.probs.sum() == pytest.approx(1 - math.tanh(eta) ** 402, abs=1e-14)
    assert sp.tail == pytest.approx(math.tanh(eta) ** 402, rel=1e-12)


def test_adaptive_kmax():
    for eta in (0.3, 1.0, 2.0, 3.0):
        k = adaptive_kmax(eta)
        t2 = math.tanh(eta) ** 2
        assert t2 ** (k + 1) < 1e-14 <= t2 ** k
    assert adaptive_kmax(0.0) == 0
    assert adaptive_kmax(50.0) == 10_000


def test_verify_expansion_disentangled():
    assert verify_expansion(0.0, 8) < 1e-12


def test_verify_expansion_off_diagonal():
    p = expansion_projections(0.5, 10)
    off = p - np.diag(np.diag(p))
    assert np.max(np.abs(off)) < 1e-10
    assert verify_expansion(0.5, 10, OscillatorBasis(10), gauss_hermite(36)) < 1e-8


def test_verify_expansion_diagonal_eta1():
    d = np.diag(expansion_projections(1.0, 12))
    assert 1 / math.cosh(1.0) == pytest.approx(0.6481, abs=1e-4)
    assert np.allclose(d, math.tanh(1.0) ** np.arange(13) / math.cosh(1.0), rtol=0, atol=1e-10)


def test_verify_expansion_errors():
    with pytest.raises(QuadratureOrderError):
        verify_expansion(0.5, 10, rule=gauss_hermite(35))
    with pytest.raises(InvariantError):
        verify_expansion(0.5, 10, basis=OscillatorBasis(9))


def test_pure_density_examples():
    assert pure_density(0.0, 0, 0, 0, 0) == pytest.approx(1 / math.pi, rel=1e-15)
    a = pure_density(0.7, 0.3, -0.2, 1.1, 0.4)
    b = pure_density(0.7, 1.1, 0.4, 0.3, -0.2)
    assert a == b


def test_pure_density_idempotent():
    assert idempotency_defect(0.5, npts=80) < 1e-8


def test_reduce_disentangled_is_projector():
    ax = reduced_axis(0.0, 201)
    rho = reduce_over_t(0.0, ax)
    phi0 = eigenfunction(0, ax)
    assert np.max(np.abs(rho.matrix - np.outer(phi0, phi0))) < 1e-12
    assert rho.purity() == pytest.approx(1.0, abs=1e-9)


def test_reduce_matches_fock_eta1():
    ax = reduced_axis(1.0)
    rho = reduce_over_t(1.0, ax)
    assert np.max(np.abs(rho.matrix - fock_reconstruction(1.0, ax))) < 1e-8
    assert abs(rho.trace() - 1) < 1e-9
    assert rho.is_symmetric()
    assert rho.eigenvalues().min() > -1e-9
    assert rho.purity() == pytest.approx(purity(1.0), abs=1e-9)
    # leading grid eigenvalues reproduce the Schmidt probabilities
    assert np.allclose(rho.eigenvalues()[:5], schmidt(1.0, 4).probs, atol=1e-9)


@pytest.mark.parametrize("eta", [0.0, 0.5, 1.0, 1.5])
def test_reduce_vs_fock_on_fixed_axis(eta):
    ax = np.linspace(-8, 8, 401)
    rho = reduce_over_t(eta, ax)
    m = rho.matrix - fock_reconstruction(eta, ax)
    # operator norm of the difference, with the grid measure
    assert np.linalg.norm(m * (ax[1] - ax[0]), 2) < 1e-7


def test_reduce_axis_too_small():
    with pytest.raises(AxisTooSmallError) as err:
        reduce_over_t(2.0, np.linspace(-5, 5, 101))
    assert err.value.required > 5


def test_reduced_density_representations():
    f = fock_density(1.2)
    assert abs(f.trace() - 1.0) < 1e-13
    assert f.purity() == pytest.approx(purity(1.2), abs=1e-13)
    with pytest.raises(InvariantError):
        ReducedDensity("wigner")
    with pytest.raises(InvariantError):
        ReducedDensity("grid", axis=np.zeros(3))


@pytest.mark.parametrize("eta", [0.0, 0.5, 1.0, 2.0, 3.0, -1.5])
def test_purity_closed_form_vs_series(eta):
    assert abs(purity(eta) - 1 / math.cosh(2 * eta)) < 1e-15
    assert abs(purity(eta) - purity_series(eta, 200 if abs(eta) < 2.5 else None)) < 1e-12


def test_purity_large_eta_asymptote_and_monotone():
    e = np.linspace(0, 10, 101)
    p = np.array([purity(x) for x in e])
    assert np.all(np.diff(p) < 0)
    assert p[0] == 1.0
    assert purity(10.0) / (2 * math.exp(-20.0)) == pytest.approx(1.0, rel=1e-8)


def test_entropy_at_zero_is_exact():
    assert entropy(0.0) == 0.0
    assert entropy_series(0.0) == 0.0


@pytest.mark.parametrize("eta", [0.25, 1.0, 2.0, 3.0])
def test_entropy_closed_form_vs_schmidt_sum(eta):
    assert abs(entropy(eta) - entropy_series(eta)) < 1e-10


@settings(max_examples=50)
@given(a=st.floats(0.001, 4.0), b=st.floats(0.001, 4.0))
def test_entropy_even_and_increasing(a, b):
    assert entropy(-a) == entropy(a)
    if a < b:
        assert entropy(a) < entropy(b)


def test_thermal_entropy_limits_and_domain():
    assert thermal_entropy(50.0) < 1e-19
    with pytest.raises(InvariantError):
        thermal_entropy(0.0)
    with pytest.raises(InvariantError):
        ThermalParameter(-1.0)


def test_thermal_entropy_ln2_two_routes():
    x = math.log(2)
    assert thermal_entropy(x) == pytest.approx(2 * math.log(2), rel=1e-14)
    # same value from the Schmidt side: Boltzmann factor 1/2 means tanh^2 eta = 1/2
    eta = math.atanh(math.sqrt(0.5))
    assert entropy(eta) == pytest.approx(2 * math.log(2), rel=1e-12)
    assert entropy_series(eta) == pytest.approx(2 * math.log(2), rel=1e-12)


@pytest.mark.parametrize("eta", [0.25, 1.0, 2.0])
def test_matched_thermal_map_reproduces_entropy(eta):
    assert abs(thermal_entropy(matched_thermal(eta)) - entropy(eta)) < 1e-12


def test_printed_map_gives_different_thermal_entropy():
    # tanh(eta) = exp(-x) makes the Boltzmann factor tanh(eta), not tanh^2(eta)
    x = eta_to_thermal(1.0)
    assert abs(thermal_entropy(x) - entropy(1.0)) > 0.5


def test_eta_to_thermal():
    assert eta_to_thermal(math.log(2)).x == pytest.approx(math.log(5 / 3), rel=1e-14)
    assert eta_to_thermal(0.3).x > 0
    assert thermal_to_eta(eta_to_thermal(0.3)) == pytest.approx(0.3, abs=1e-12)
    assert eta_to_thermal(20.0).x < 1e-16
    for bad in (0.0, -0.5):
        with pytest.raises(InvariantError):
            eta_to_thermal(bad)
        with pytest.raises(InvariantError):
            matched_thermal(bad)
