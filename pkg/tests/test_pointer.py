"""Time-dependent pointer states: angles, eigenvalue scalars, field branches,
basis change, and the branch-coincidence schedule."""

import math

import numpy as np
import pytest

from spinboson import (
    LOWER,
    PointerSign,
    PoleError,
    QubitState,
    SimConfig,
    coherent,
    coincidence_times,
    env_pointer_coherent_approx,
    env_pointer_exact,
    evolve_product,
    g_scalar,
    initial_pointer_states,
    inner,
    pointer_angles,
    pointer_state_at,
    to_pointer_basis,
)

PHI = math.pi / 6.0
NBAR = 50.0


def _close(q1: QubitState, q2: QubitState, tol=1e-12):
    return abs(q1.alpha - q2.alpha) < tol and abs(q1.beta - q2.beta) < tol


def test_initial_pointer_components():
    plus, minus = initial_pointer_states(PHI)
    h = 0.5 * PHI
    assert plus.alpha == pytest.approx(-1j * math.cos(h))
    assert plus.beta == pytest.approx(math.sin(h))
    assert minus.alpha == pytest.approx(1j * math.sin(h))
    assert minus.beta == pytest.approx(math.cos(h))


def test_angles_drift_linearly():
    a0 = pointer_angles(PHI, NBAR, 0.0)
    assert a0.theta_plus == a0.theta_minus == pytest.approx(0.5 * PHI)
    t = 3.7
    a = pointer_angles(PHI, NBAR, t)
    drift = t / (4.0 * math.sqrt(NBAR))
    assert a.theta_plus == pytest.approx(0.5 * PHI + drift)
    assert a.theta_minus == pytest.approx(0.5 * PHI - drift)
    with pytest.raises(ValueError):
        pointer_angles(PHI, 0.0, 1.0)


def test_pointer_state_at_reduces_to_initial():
    plus, minus = initial_pointer_states(PHI)
    assert _close(pointer_state_at(PHI, NBAR, 0.0, PointerSign.PLUS), plus)
    assert _close(pointer_state_at(PHI, NBAR, 0.0, PointerSign.MINUS), minus)


def test_g_scalar_values_and_poles():
    a = pointer_angles(PHI, NBAR, 2.0)
    gp = g_scalar(PHI, NBAR, 2.0, PointerSign.PLUS)
    gm = g_scalar(PHI, NBAR, 2.0, PointerSign.MINUS)
    assert gp == pytest.approx(-1j / math.tan(a.theta_plus))
    assert gm == pytest.approx(1j * math.tan(a.theta_minus))
    # theta_plus = pi makes cot singular; theta_minus = pi/2 makes tan singular
    with pytest.raises(PoleError):
        g_scalar(0.0, NBAR, 4.0 * math.pi * math.sqrt(NBAR), PointerSign.PLUS)
    with pytest.raises(PoleError):
        g_scalar(math.pi, NBAR, 0.0, PointerSign.MINUS)


def test_pointer_product_is_instantaneous_eigenpair():
    # at t' = 0 the evolved branches are exactly proportional: A = G * B
    cfg = SimConfig(nbar=NBAR, phi=PHI, n_max=150)
    field = coherent(NBAR, PHI, cfg.n_max)
    plus, _ = initial_pointer_states(PHI)
    joint = evolve_product(plus, field, 0.0)
    g0 = g_scalar(PHI, NBAR, 0.0, PointerSign.PLUS)
    assert np.max(np.abs(joint.A.amps - g0 * joint.B.amps)) < 1e-12


def test_parallelism_deviation_is_order_tenths(cfg50, field50):
    # off t' = 0 the branch vectors of a pointer product are only roughly
    # parallel; the measured deviation sits between 0.1 and 0.3 out to
    # t' = sqrt(nbar) (exact parallelism holds only at the start)
    plus, _ = initial_pointer_states(PHI)
    worst = 0.0
    for t in (1.0, 2.0, 3.535, 5.0, 7.07):
        joint = evolve_product(plus, field50, t)
        g = g_scalar(PHI, NBAR, t, PointerSign.PLUS)
        num = np.linalg.norm(joint.A.amps - g * joint.B.amps)
        eps = num / np.linalg.norm(joint.A.amps)
        assert eps < 0.3
        worst = max(worst, eps)
    assert worst > 0.1


def test_env_pointer_exact_phases(cfg50, field50):
    out = env_pointer_exact(cfg50, 1.3, PointerSign.PLUS)
    assert abs(out.norm_sq() - field50.norm_sq()) < 1e-12
    n = 7
    expect = np.exp(-0.5j * 1.3 * (math.sqrt(n + 1.0) + math.sqrt(n)))
    assert out.amps[n] / field50.amps[n] == pytest.approx(expect)
    out_m = env_pointer_exact(cfg50, 1.3, PointerSign.MINUS)
    assert out_m.amps[n] / field50.amps[n] == pytest.approx(np.conj(expect))


def test_env_overlap_identity(cfg50):
    # <Phi_-|Phi_+> equals the Poisson sum of e^{-i t'(sqrt(n+1)+sqrt(n))}
    t = 0.9
    fp = env_pointer_exact(cfg50, t, PointerSign.PLUS)
    fm = env_pointer_exact(cfg50, t, PointerSign.MINUS)
    ov = inner(fm, fp)
    n = np.arange(cfg50.n_max + 1)
    probs = np.abs(coherent(NBAR, PHI, cfg50.n_max).amps) ** 2
    direct = np.sum(probs * np.exp(-1j * t * (np.sqrt(n + 1.0) + np.sqrt(n))))
    assert abs(ov - direct) < 1e-12


def test_coherent_approx_tracks_exact(cfg50):
    # fidelity of the drifting-coherent approximation stays above 0.99
    # out to t' = 2, and is visibly degraded (but still ~0.985) by t' = 5
    def fid(t):
        exact = env_pointer_exact(cfg50, t, PointerSign.PLUS)
        gl, nu_eff = env_pointer_coherent_approx(cfg50, t, PointerSign.PLUS)
        assert abs(abs(gl) - 1.0) < 1e-12
        assert abs(abs(nu_eff) - math.sqrt(NBAR)) < 1e-12
        approx = coherent(NBAR, -float(np.angle(nu_eff)), cfg50.n_max)
        ip = gl * inner(exact, approx)
        return abs(ip) ** 2 / (exact.norm_sq() * approx.norm_sq())

    for t in np.linspace(0.0, 2.0, 21):
        assert fid(float(t)) > 0.99
    assert 0.97 < fid(5.0) < 0.99


def test_to_pointer_basis():
    ap, bp = to_pointer_basis(LOWER, PHI)
    assert ap == pytest.approx(math.sin(0.5 * PHI))
    assert bp == pytest.approx(math.cos(0.5 * PHI))
    plus, minus = initial_pointer_states(PHI)
    ap, bp = to_pointer_basis(plus, PHI)
    assert abs(ap - 1.0) < 1e-15 and abs(bp) < 1e-15
    ap, bp = to_pointer_basis(minus, PHI)
    assert abs(ap) < 1e-15 and abs(bp - 1.0) < 1e-15
    q = QubitState.normalized(0.3 + 0.4j, 0.8)
    ap, bp = to_pointer_basis(q, PHI)
    assert abs(ap) ** 2 + abs(bp) ** 2 == pytest.approx(1.0)


def test_coincidence_schedule():
    out = coincidence_times(NBAR, PHI, 2)
    assert len(out) == 2
    t1, q1 = out[0]
    t2, q2 = out[1]
    assert t1 == pytest.approx(math.pi * math.sqrt(NBAR))
    assert t2 == pytest.approx(3.0 * math.pi * math.sqrt(NBAR))
    # odd meetings sit at phi/2 - pi/4, even ones at phi/2 + pi/4
    assert q1.alpha == pytest.approx(1j * math.sin(0.5 * PHI - 0.25 * math.pi))
    assert q1.beta == pytest.approx(math.cos(0.5 * PHI - 0.25 * math.pi))
    assert q2.alpha == pytest.approx(1j * math.sin(0.5 * PHI + 0.25 * math.pi))
    assert q2.beta == pytest.approx(math.cos(0.5 * PHI + 0.25 * math.pi))
    with pytest.raises(ValueError):
        coincidence_times(NBAR, PHI, 0)


def test_pointer_states_meet_at_coincidences():
    (t1, q1), (t2, q2) = coincidence_times(NBAR, PHI, 2)
    # both rotating pointer states pass through the published meeting state,
    # the minus branch up to a global sign at the even meetings
    p1 = pointer_state_at(PHI, NBAR, t1, PointerSign.PLUS)
    m1 = pointer_state_at(PHI, NBAR, t1, PointerSign.MINUS)
    assert _close(p1, q1, 1e-9) and _close(m1, q1, 1e-9)
    p2 = pointer_state_at(PHI, NBAR, t2, PointerSign.PLUS)
    m2 = pointer_state_at(PHI, NBAR, t2, PointerSign.MINUS)
    assert _close(p2, q2, 1e-9)
    assert abs(m2.alpha + q2.alpha) < 1e-9 and abs(m2.beta + q2.beta) < 1e-9
