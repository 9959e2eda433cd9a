"""Independent numerical integrator: config validation, convergence ladder,
agreement with the analytic resonance solution, and the full-generator
rotating-wave error."""

import math

import numpy as np
import pytest

from spinboson import (
    IntegratorError,
    QubitState,
    TruncationError,
    UPPER,
    coherent,
    evolve_product,
)
from spinboson.fock import FieldVector
from spinboson.oracle import OracleConfig, integrate, rwa_error


@pytest.fixture(scope="module")
def probe():
    # small, cheap probe state reused across the slow tests
    return QubitState.normalized(0.6, 0.8), coherent(2.0, 0.4, 25)


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(g=0.0)
    with pytest.raises(ValueError):
        OracleConfig(step_dt_prime=0.0)
    with pytest.raises(ValueError):
        OracleConfig(tolerance=-1.0)
    with pytest.raises(ValueError):
        OracleConfig(rwa=True, delta0=2.0, omega=1.0)
    # off-resonance is fine for the full generator
    OracleConfig(rwa=False, delta0=2.0, omega=1.0)


def test_grid_validation(probe):
    q, field = probe
    with pytest.raises(ValueError):
        integrate(OracleConfig(), q, field, [])
    with pytest.raises(ValueError):
        integrate(OracleConfig(), q, field, [1.0, 0.5])
    with pytest.raises(ValueError):
        integrate(OracleConfig(), q, field, [-1.0, 0.5])


def test_zero_span_returns_product(probe):
    q, field = probe
    res = integrate(OracleConfig(), q, field, [0.0])
    assert res.norm_drift == 0.0
    st = res.states[0]
    assert np.max(np.abs(st.A.amps - q.alpha * field.amps)) < 1e-15
    assert np.max(np.abs(st.B.amps - q.beta * field.amps)) < 1e-15


def test_tail_guard(probe):
    q, _ = probe
    bad = FieldVector(amps=np.array([1.0, 0.0]), n_max=1, tail_mass=1e-6)
    with pytest.raises(TruncationError):
        integrate(OracleConfig(), q, bad, [1.0])


def test_matches_analytic_resonance_solution(probe):
    # the rotating-wave trajectory must land on the closed-form evolution
    q, field = probe
    res = integrate(OracleConfig(), q, field, [0.5, 1.5, 3.0])
    assert res.norm_drift < 1e-8
    for st in res.states:
        ana = evolve_product(q, field, st.t_prime)
        assert np.max(np.abs(st.A.amps - ana.A.amps)) < 1e-8
        assert np.max(np.abs(st.B.amps - ana.B.amps)) < 1e-8


def test_halving_ladder_refines(probe):
    # a huge tolerance accepts after the first halving, so the accepted
    # step is half the requested one; tightening the tolerance refines it
    q, field = probe
    loose = integrate(OracleConfig(step_dt_prime=0.02, tolerance=1.0), q, field, [1.0])
    assert loose.step_used == pytest.approx(0.01)
    tight = integrate(OracleConfig(step_dt_prime=0.02, tolerance=1e-9), q, field, [1.0])
    assert tight.step_used < loose.step_used


def test_impossible_tolerance_raises(probe):
    q, field = probe
    cfg = OracleConfig(step_dt_prime=0.05, tolerance=1e-300)
    with pytest.raises(IntegratorError):
        integrate(cfg, q, field, [0.1])


def test_rwa_error_guards(probe):
    q, field = probe
    with pytest.raises(ValueError):
        rwa_error(OracleConfig(rwa=True), q, field, 1.0)
    cfg = OracleConfig(rwa=False)
    assert rwa_error(cfg, q, field, 0.0) == 0.0


def test_rwa_error_vanishes_in_weak_coupling(probe):
    # with g 6 orders below the mode frequency the counter-rotating terms
    # contribute ~1e-10 over a 25-cycle window
    q, field = probe
    w = 1.0e6
    tpf = math.pi * 50.0 / w
    cfg = OracleConfig(g=1.0 / w, delta0=1.0, omega=1.0, rwa=False,
                       step_dt_prime=tpf / 4000.0, tolerance=1e-7)
    assert rwa_error(cfg, q, field, tpf) < 1e-8


def test_rwa_error_scales_inversely_with_frequency(probe):
    # frozen reference: errors 0.1242 / 0.0530 / 0.0263 at w = 20/50/100,
    # i.e. err * w settles near 2.5-2.7 (first-order in g/omega)
    q, field = probe
    errs = {}
    for w in (20.0, 50.0, 100.0):
        cfg = OracleConfig(g=1.0 / w, delta0=1.0, omega=1.0, rwa=False,
                           step_dt_prime=1.0 / (40.0 * w), tolerance=1e-2)
        errs[w] = rwa_error(cfg, q, field, 5.0)
    assert errs[20.0] == pytest.approx(0.1242, abs=0.002)
    assert errs[50.0] == pytest.approx(0.0530, abs=0.001)
    assert errs[100.0] == pytest.approx(0.0263, abs=0.001)
    assert errs[20.0] > errs[50.0] > errs[100.0]
    assert 2.0 < errs[20.0] / errs[50.0] < 2.7
    assert 1.8 < errs[50.0] / errs[100.0] < 2.2
