"""Exact product-state evolution and the two reduced-density-matrix routes."""

import math

import numpy as np
import pytest

from spinboson import (
    LOWER,
    UPPER,
    DensityMatrix2,
    JointState,
    QubitState,
    SimConfig,
    TruncationError,
    coherent,
    evolve_product,
    population_inversion,
    reduce,
    rho_series,
)
from spinboson.fock import FieldVector

SEED = 20260818


def test_qubit_state_validation():
    with pytest.raises(ValueError):
        QubitState(1.0, 1.0)
    with pytest.raises(ValueError):
        QubitState.normalized(0.0, 0.0)
    q = QubitState.normalized(3.0, 4.0j)
    assert q.alpha == pytest.approx(0.6)
    assert q.beta == pytest.approx(0.8j)


def test_level_constants():
    assert UPPER.alpha == 1.0 and UPPER.beta == 0.0
    assert LOWER.alpha == 0.0 and LOWER.beta == 1.0


def test_evolution_at_time_zero_is_identity(field50):
    q = QubitState.normalized(0.6, 0.8j)
    joint = evolve_product(q, field50, 0.0)
    assert np.max(np.abs(joint.A.amps - q.alpha * field50.amps)) < 1e-15
    assert np.max(np.abs(joint.B.amps - q.beta * field50.amps)) < 1e-15
    rho = reduce(joint)
    # initial coherence is alpha beta* up to the (tiny) truncated tail
    assert abs(rho.rho12 - q.alpha * np.conj(q.beta)) < 1e-12


def test_two_routes_agree(cfg50, field50):
    rng = np.random.default_rng(SEED)
    for _ in range(4):
        z = rng.normal(size=4)
        q = QubitState.normalized(complex(z[0], z[1]), complex(z[2], z[3]))
        for t in (0.7, 5.0, 31.4):
            rho_a = reduce(evolve_product(q, field50, t))
            rho_b = rho_series(q, cfg50, t)
            assert abs(rho_a.rho11 - rho_b.rho11) < 1e-12
            assert abs(rho_a.rho12 - rho_b.rho12) < 1e-12


def test_norm_is_conserved(field50):
    q = QubitState.normalized(1.0, -1.0j)
    for t in (0.3, 8.0, 120.0):
        joint = evolve_product(q, field50, t)
        total = joint.A.norm_sq() + joint.B.norm_sq()
        assert abs(total - 1.0) < 1e-12


def test_population_inversion_fixtures(cfg50):
    # collapse from W(0) = 1: frozen reference values of the exact sums
    assert population_inversion(UPPER, cfg50, 0.0) == 1.0
    assert population_inversion(UPPER, cfg50, 2.0) == pytest.approx(0.6256934352861031, abs=1e-12)
    assert population_inversion(UPPER, cfg50, 10.0) == pytest.approx(0.2424085637526002, abs=1e-12)


def test_population_inversion_swings(cfg50):
    # the inversion rides a slow large-amplitude swing: it decays from +1,
    # crosses zero between t' = 10 and 20, and bottoms out near t' = 35
    assert population_inversion(UPPER, cfg50, 15.0) < 0.0 < population_inversion(UPPER, cfg50, 10.0)
    w35 = population_inversion(UPPER, cfg50, 35.0)
    assert -0.95 < w35 < -0.85
    for t in (3.0, 17.0, 44.0, 90.0):
        assert abs(population_inversion(UPPER, cfg50, t)) <= 1.0


def test_lower_start_mirrors_upper(cfg50):
    assert population_inversion(LOWER, cfg50, 0.0) == -1.0


def test_joint_state_validation(field50):
    small = coherent(50.0, 0.0, 140)
    with pytest.raises(ValueError):
        JointState(A=field50, B=small, t_prime=0.0)
    with pytest.raises(ValueError):
        JointState(A=field50, B=field50, t_prime=0.0)  # norm 2, not 1


def test_density_matrix_validation():
    with pytest.raises(ValueError):
        DensityMatrix2(rho11=1.5, rho12=0.0)
    with pytest.raises(ValueError):
        DensityMatrix2(rho11=0.5, rho12=0.9)  # |rho12|^2 > rho11 rho22
    rho = DensityMatrix2(rho11=0.25, rho12=0.1j)
    assert rho.rho22 == 0.75


def test_evolve_rejects_field_at_cutoff():
    amps = np.ones(41, dtype=complex) / math.sqrt(41.0)
    with pytest.raises(TruncationError):
        evolve_product(UPPER, FieldVector(amps=amps, n_max=40), 1.0)
