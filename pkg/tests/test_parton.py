import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from covosc.covariant import boosted_wavefunction, wavefunction_grid
from covosc.errors import InvariantError
from covosc.hermite import gauss_hermite, lightcone_product_rule
from covosc.parton import (PROTON_MASS_GEV, BoostKinematics, MomentumVars, axis_widths, decoherence_ratio,
                           fourier_check, kinematics, momentum_grid, momentum_vars, momentum_wavefunction,
                           second_moment_matrix, separation_coordinate)


def test_momentum_vars_examples():
    P, q = momentum_vars((0.4, 1.3), (0.4, 1.3))
    assert (q.q_z, q.q_0) == (0.0, 0.0)
    P, q = momentum_vars((1.0, 2.0), (0.0, 1.0))
    assert P == (1.0, 3.0)
    assert (q.q_z, q.q_0) == pytest.approx((math.sqrt(2), math.sqrt(2)), rel=1e-15)
    assert q.q_u == pytest.approx(0.0, abs=1e-15)
    assert q.q_v == pytest.approx(2.0, rel=1e-15)


@given(st.tuples(st.floats(-10, 10), st.floats(-10, 10)), st.tuples(st.floats(-10, 10), st.floats(-10, 10)))
def test_momentum_vars_antisymmetric(a, b):
    _, q1 = momentum_vars(a, b)
    _, q2 = momentum_vars(b, a)
    assert (q1.q_z, q1.q_0) == (-q2.q_z, -q2.q_0)
    assert q1.q_u == pytest.approx((q1.q_0 - q1.q_z) / math.sqrt(2), abs=1e-14 * 40)
    assert q1.q_v == pytest.approx((q1.q_0 + q1.q_z) / math.sqrt(2), abs=1e-14 * 40)


def test_momentum_vars_type():
    q = MomentumVars.from_components(1.0, 3.0)
    assert q.q_u == pytest.approx(2 / math.sqrt(2))
    assert q.q_v == pytest.approx(4 / math.sqrt(2))


def test_separation_coordinate():
    assert separation_coordinate((1.0, 2.0), (0.0, 0.0)) == pytest.approx(
        (1 / (2 * math.sqrt(2)), 2 / (2 * math.sqrt(2))))


def test_momentum_wavefunction_peak():
    assert momentum_wavefunction(0.0, 0.0, 0.0) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-15)


def test_momentum_wavefunction_is_spacetime_profile():
    # q_u = (q_0 - q_z)/sqrt2 plays u = (z + t)/sqrt2 with z = q_0, t = -q_z
    rng = np.random.default_rng(11)
    qz, q0 = rng.normal(scale=2, size=(2, 500))
    for eta in (-1.0, 0.0, 0.4, 1.7):
        a = momentum_wavefunction(eta, qz, q0)
        b = boosted_wavefunction(0, eta, q0, -qz)
        assert np.max(np.abs(a - b)) < 1e-14


@pytest.mark.parametrize("eta", [-2.0, 0.0, 0.9, 2.0])
def test_momentum_wavefunction_norm(eta):
    a, b = math.exp(-2 * eta), math.exp(2 * eta)
    # the rule's (z, t) map to (q_0, -q_z), so its (u, v) are (q_u, q_v);
    # half the exponent goes into the weights, half stays in the integrand
    z, t, w = lightcone_product_rule(gauss_hermite(30), a / 2, b / 2)
    q0, qz = z, -t
    q_u, q_v = (q0 - qz) / math.sqrt(2), (q0 + qz) / math.sqrt(2)
    env = np.exp(-0.5 * (a * q_u ** 2 + b * q_v ** 2))
    val = np.dot(w, momentum_wavefunction(eta, qz, q0) ** 2 / env)
    assert abs(val - 1.0) < 1e-12
    if abs(eta) <= 1:
        # trapezoid cross-check; the minor width e^-|eta| must span several cells
        ax = np.arange(-8 * math.exp(abs(eta)), 8 * math.exp(abs(eta)) + 1e-9, 0.04)
        assert abs(momentum_grid(eta, ax, ax).norm() - 1.0) < 1e-6


def test_fourier_check_isotropic():
    fc = fourier_check(0.0)
    assert fc.max_error < 1e-8
    assert max(fc.errors.values()) < 1e-8


def test_fourier_check_selects_same_sign_class():
    results = [fourier_check(eta) for eta in (0.3, 0.8, 1.5)]
    for fc in results:
        assert fc.max_error < 1e-6
        assert fc.kernel_class == 1
        # the opposite class misses the squeeze orientation by a wide margin
        assert fc.errors[(1, -1)] > 0.1 and fc.errors[(-1, 1)] > 0.1
    assert len({fc.convention for fc in results}) == 1


def test_kinematics_rest_frame():
    k = kinematics(0.938272)
    assert (k.gamma, k.eta) == (1.0, 0.0)


def test_kinematics_examples():
    k = kinematics(2.0, 1.0)
    assert k.gamma == 2.0
    assert k.eta == pytest.approx(math.log(2 + math.sqrt(3)), rel=1e-15)
    k = kinematics(900.0, 0.938)
    assert k.gamma == pytest.approx(959.49, abs=0.01)
    assert math.exp(k.eta) == pytest.approx(2 * k.gamma, rel=1e-6)
    assert math.exp(k.eta) == pytest.approx(k.gamma + math.sqrt(k.gamma ** 2 - 1), rel=1e-12)


@given(st.floats(1.0, 1e6))
def test_kinematics_round_trip(gamma):
    k = kinematics(gamma * PROTON_MASS_GEV, PROTON_MASS_GEV)
    assert math.cosh(k.eta) == pytest.approx(k.gamma, rel=1e-12)


def test_kinematics_rejects_sub_threshold():
    with pytest.raises(InvariantError):
        kinematics(0.5, 0.938272)
    with pytest.raises(InvariantError):
        kinematics(1.0, 0.0)


def test_axis_widths():
    assert axis_widths(0.0) == (1.0, 1.0)
    assert axis_widths(math.log(3)) == pytest.approx((3.0, 1 / 3), rel=1e-15)
    for eta in np.random.default_rng(2).uniform(0, 10, 20):
        major, minor = axis_widths(eta)
        assert major * minor == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(InvariantError):
        axis_widths(-0.1)


def test_decoherence_ratio():
    assert decoherence_ratio(kinematics(1.0, 1.0)) == 1.0
    k = kinematics(900.0, PROTON_MASS_GEV)
    r = decoherence_ratio(k)
    assert 1e-7 <= r <= 1e-6
    assert r == pytest.approx(math.exp(-2 * math.acosh(900.0 / PROTON_MASS_GEV)), rel=1e-12)
    major, minor = axis_widths(k.eta)
    assert r == pytest.approx(minor / major, rel=1e-12)
    etas = np.linspace(0, 8, 50)
    ratios = [decoherence_ratio(e) for e in etas]
    assert np.all(np.diff(ratios) < 0)
    assert isinstance(k, BoostKinematics)


@pytest.mark.parametrize("eta", [0.3, 0.8, 1.5])
def test_second_moment_spectra_match(eta):
    ax = np.arange(-10 * math.exp(eta), 10 * math.exp(eta) + 1e-9, 0.05)
    expected = np.sort([math.exp(-2 * eta) / 2, math.exp(2 * eta) / 2])
    for grid in (wavefunction_grid(0, eta, ax, ax), momentum_grid(eta, ax, ax)):
        ev = np.linalg.eigvalsh(second_moment_matrix(grid))
        assert np.max(np.abs(ev - expected)) < 1e-8
