"""Brute-force integrator used to cross-check the analytic propagator.

Integrates i d|psi>/dt' = H(t')|psi> on the truncated joint space
{|a,n>, |b,n>} with classic fixed-step RK4, in two variants:

* full: the complete interaction-picture generator, counter-rotating
  oscillations included, parametrized by w = omega/g and d0 = delta0/g;
* rwa: only the terms whose oscillatory factors cancel at resonance
  (delta0 = omega), which leaves a time-independent generator.

Everything is deliberately independent of propagator/dynamics: ladder
operators are applied directly and the generator is rebuilt from its
definition at every evaluation. Fixed steps with halving-based acceptance
keep runs bit-reproducible; adaptive integrators would not.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import JointState, QubitState
from .errors import IntegratorError, TruncationError
from .fock import TAIL_GUARD, FieldVector
from .propagator import EDGE_GUARD

_MAX_HALVINGS = 8


@dataclass(frozen=True)
class OracleConfig:
    """Physical parameters (rad/time) plus integrator knobs.

    Times handed to integrate/rwa_error are dimensionless t' = g t; omega
    and delta0 enter the generator through w = omega/g and d0 = delta0/g.
    """

    g: float = 1.0
    delta0: float = 1.0
    omega: float = 1.0
    rwa: bool = True
    step_dt_prime: float = 1e-3
    tolerance: float = 1e-7

    def __post_init__(self) -> None:
        if self.g <= 0:
            raise ValueError("coupling g must be positive")
        if self.step_dt_prime <= 0 or self.tolerance <= 0:
            raise ValueError("step and tolerance must be positive")
        if self.rwa and not math.isclose(self.delta0, self.omega,
                                         rel_tol=1e-12, abs_tol=0.0):
            raise ValueError("the rotating-wave variant is defined at "
                             "resonance only (delta0 = omega)")


@dataclass(frozen=True)
class OracleResult:
    states: tuple[JointState, ...]
    norm_drift: float
    step_used: float


def _lower(v: np.ndarray) -> np.ndarray:
    out = np.zeros_like(v)
    out[:-1] = np.sqrt(np.arange(1, len(v))) * v[1:]
    return out


def _raise(v: np.ndarray) -> np.ndarray:
    out = np.zeros_like(v)
    out[1:] = np.sqrt(np.arange(1, len(v))) * v[:-1]
    return out


def _deriv_rwa(t: float, psi: np.ndarray, dim: int) -> np.ndarray:
    A = psi[:dim]
    B = psi[dim:]
    dA = 0.5 * ((_lower(A) + _raise(A)) + (_lower(B) - _raise(B)))
    dB = 0.5 * ((_raise(A) - _lower(A)) - (_lower(B) + _raise(B)))
    return -1j * np.concatenate([dA, dB])


def _deriv_full(t: float, psi: np.ndarray, dim: int, w: float, d0: float) -> np.ndarray:
    A = psi[:dim]
    B = psi[dim:]
    ep = np.exp(1j * w * t)
    em = np.conj(ep)
    FA = ep * _raise(A) + em * _lower(A)
    FB = ep * _raise(B) + em * _lower(B)
    c = math.cos(d0 * t)
    s = math.sin(d0 * t)
    dA = c * FA + 1j * s * FB
    dB = -1j * s * FA - c * FB
    return -1j * np.concatenate([dA, dB])


def _rk4(deriv, psi0: np.ndarray, t0: float, t1: float, nsteps: int) -> np.ndarray:
    h = (t1 - t0) / nsteps
    psi = psi0.copy()
    t = t0
    for _ in range(nsteps):
        k1 = deriv(t, psi)
        k2 = deriv(t + 0.5 * h, psi + 0.5 * h * k1)
        k3 = deriv(t + 0.5 * h, psi + 0.5 * h * k2)
        k4 = deriv(t + h, psi + h * k3)
        psi = psi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t += h
    return psi


def _check_edge(amps: np.ndarray, label: str) -> None:
    peak = float(np.max(np.abs(amps)))
    if peak == 0.0:
        return
    if float(np.max(np.abs(amps[-3:]))) > EDGE_GUARD * peak:
        raise TruncationError(f"{label} branch has reached the truncation edge")


def integrate(cfg: OracleConfig, q: QubitState, field: FieldVector,
              t_grid) -> OracleResult:
    """Integrate the joint state from the product q (x) field through t_grid.

    The step is validated once on the full span: the trajectory is rerun
    with the step halved until the final states of consecutive runs differ
    by less than tolerance/10 in norm (at most 8 halvings, then
    IntegratorError); the grid states are then produced at the accepted
    resolution. Returns the states at the requested times together with the
    worst squared-norm drift seen on the grid.
    """
    grid = [float(t) for t in t_grid]
    if not grid:
        raise ValueError("empty time grid")
    if grid[0] < 0.0 or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("time grid must be strictly increasing and >= 0")
    if field.tail_mass > TAIL_GUARD:
        raise TruncationError(f"field tail mass {field.tail_mass:.3e} too large")

    dim = field.n_max + 1
    psi0 = np.concatenate([q.alpha * field.amps, q.beta * field.amps])
    norm0 = float(np.sum(np.abs(psi0) ** 2))
    w = cfg.omega / cfg.g
    d0 = cfg.delta0 / cfg.g
    if cfg.rwa:
        deriv = lambda t, p: _deriv_rwa(t, p, dim)
    else:
        deriv = lambda t, p: _deriv_full(t, p, dim, w, d0)

    def _joint(psi: np.ndarray, tp: float) -> JointState:
        a = psi[:dim].copy()
        b = psi[dim:].copy()
        _check_edge(a, "upper")
        _check_edge(b, "lower")
        return JointState(
            A=FieldVector(amps=a, n_max=field.n_max, tail_mass=field.tail_mass),
            B=FieldVector(amps=b, n_max=field.n_max, tail_mass=field.tail_mass),
            t_prime=tp)

    span = grid[-1]
    if span == 0.0:
        return OracleResult(states=(_joint(psi0, 0.0),), norm_drift=0.0,
                            step_used=cfg.step_dt_prime)

    # step acceptance ladder on the full span
    n_base = max(1, math.ceil(span / cfg.step_dt_prime))
    prev = _rk4(deriv, psi0, 0.0, span, n_base)
    accepted = None
    for k in range(1, _MAX_HALVINGS + 1):
        n_fine = n_base * 2 ** k
        fine = _rk4(deriv, psi0, 0.0, span, n_fine)
        if float(np.linalg.norm(fine - prev)) < cfg.tolerance / 10.0:
            accepted = n_fine
            break
        prev = fine
    if accepted is None:
        raise IntegratorError(
            f"no step acceptance after {_MAX_HALVINGS} halvings "
            f"(start step {cfg.step_dt_prime:g} over span {span:g})")
    h_acc = span / accepted

    # walk the grid at the accepted resolution
    states = []
    drift = 0.0
    psi = psi0
    t_prev = 0.0
    for tp in grid:
        seg = tp - t_prev
        if seg > 0.0:
            nsteps = max(1, math.ceil(seg / h_acc - 1e-12))
            psi = _rk4(deriv, psi, t_prev, tp, nsteps)
            t_prev = tp
        states.append(_joint(psi, tp))
        drift = max(drift, abs(float(np.sum(np.abs(psi) ** 2)) - norm0))
    return OracleResult(states=tuple(states), norm_drift=drift, step_used=h_acc)


def rwa_error(cfg: OracleConfig, q: QubitState, field: FieldVector,
              t_prime: float) -> float:
    """Norm distance at t' between the full-generator trajectory and the
    analytic resonance solution: ||psi_full(t') - psi_rwa_analytic(t')||.

    Requires a full-variant config (rwa=False); the analytic side comes
    from dynamics.evolve_product, which is exact for the resonant
    rotating-wave dynamics.
    """
    if cfg.rwa:
        raise ValueError("rwa_error needs cfg.rwa = False (full generator)")
    from .dynamics import evolve_product  # local import keeps modules independent

    if t_prime == 0.0:
        return 0.0
    res = integrate(cfg, q, field, [t_prime])
    full = res.states[-1]
    ana = evolve_product(q, field, t_prime)
    diff_a = full.A.amps - ana.A.amps
    diff_b = full.B.amps - ana.B.amps
    return float(np.sqrt(np.sum(np.abs(diff_a) ** 2) + np.sum(np.abs(diff_b) ** 2)))
