"""Time-dependent pointer states of the qubit and the field.

For a coherent field start, the branch vectors of particular initial qubit
states stay (approximately) parallel, A(t) = G(t) B(t), with an n-independent
scalar G. Those initial states and their time evolution are parametrized by
the angles theta_pm(t) = phi/2 +- t'/(4 sqrt(nbar)); the accompanying field
states pick up number-dependent phases exp(-+ (i t'/2)(sqrt(n+1)+sqrt(n))).

The coherent-state approximation of the field pointer states linearizes
sqrt(n+1) + sqrt(n) around the Poisson peak. The tangent line at n = nbar,
i.e. n^2 ~ 2 nbar n - nbar^2 for the quadratic piece, gives the rotation
rate (1 - 1/4nbar)/(2 sqrt(nbar)) and the global phase coefficient
1 + 3/(4 nbar) - 1/(8 nbar^2) used here; a secant slope through n = 0 would
misstate the rate as 5/4-ish and is measurably wrong at nbar = 50, so the
tangent form is used throughout this module and in closedform.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .dynamics import QubitState
from .errors import PoleError
from .fock import FieldVector, SimConfig, coherent

_POLE_EPS = 1e-12


class PointerSign(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class PointerAngles:
    theta_plus: float
    theta_minus: float


def pointer_angles(phi: float, nbar: float, t_prime: float) -> PointerAngles:
    if nbar <= 0:
        raise ValueError("pointer angles need nbar > 0")
    drift = t_prime / (4.0 * math.sqrt(nbar))
    return PointerAngles(theta_plus=phi / 2.0 + drift, theta_minus=phi / 2.0 - drift)


def initial_pointer_states(phi: float) -> tuple[QubitState, QubitState]:
    """The two qubit states whose branches start parallel:
    |+> = -i cos(phi/2)|a> + sin(phi/2)|b>, |-> = i sin(phi/2)|a> + cos(phi/2)|b>."""
    half = phi / 2.0
    plus = QubitState(-1j * math.cos(half), math.sin(half) + 0.0j)
    minus = QubitState(1j * math.sin(half), math.cos(half) + 0.0j)
    return plus, minus


def pointer_state_at(phi: float, nbar: float, t_prime: float, s: PointerSign) -> QubitState:
    """Pointer state at time t', rotated by the drift t'/(4 sqrt(nbar))."""
    ang = pointer_angles(phi, nbar, t_prime)
    if s == PointerSign.PLUS:
        return QubitState(-1j * math.cos(ang.theta_plus), math.sin(ang.theta_plus) + 0.0j)
    return QubitState(1j * math.sin(ang.theta_minus), math.cos(ang.theta_minus) + 0.0j)


def g_scalar(phi: float, nbar: float, t_prime: float, s: PointerSign) -> complex:
    """Branch parallelism ratio: -i cot(theta_plus) or +i tan(theta_minus).

    Raises PoleError where the ratio diverges (the pointer state momentarily
    coincides with a bare level); the state itself stays well defined through
    pointer_state_at.
    """
    ang = pointer_angles(phi, nbar, t_prime)
    if s == PointerSign.PLUS:
        sn = math.sin(ang.theta_plus)
        if abs(sn) < _POLE_EPS:
            raise PoleError(f"cot pole: theta_plus = {ang.theta_plus!r}")
        return -1j * math.cos(ang.theta_plus) / sn
    cs = math.cos(ang.theta_minus)
    if abs(cs) < _POLE_EPS:
        raise PoleError(f"tan pole: theta_minus = {ang.theta_minus!r}")
    return 1j * math.sin(ang.theta_minus) / cs


def env_pointer_exact(config: SimConfig, t_prime: float, s: PointerSign) -> FieldVector:
    """Field pointer state: coherent coefficients with the exact phases
    exp(-+ (i t'/2)(sqrt(n+1) + sqrt(n))). Pure phase modulation, so the norm
    matches the input coherent vector's for every t'."""
    base = coherent(config.nbar, config.phi, config.n_max)
    n = np.arange(config.n_max + 1)
    sgn = 1.0 if s == PointerSign.PLUS else -1.0
    phases = np.exp(-0.5j * sgn * t_prime * (np.sqrt(n + 1.0) + np.sqrt(n)))
    return FieldVector(amps=base.amps * phases, n_max=config.n_max,
                       tail_mass=base.tail_mass)


class CoherentApprox(NamedTuple):
    global_phase: complex
    nu_eff: complex


def env_pointer_coherent_approx(config: SimConfig, t_prime: float,
                                s: PointerSign) -> CoherentApprox:
    """Coherent-state form of the field pointer state.

    |Phi_pm(t)> ~ global_phase * |nu_eff> with nu_eff = nu exp(-+ i w t') and
    rotation rate w = (1 - 1/(4 nbar)) / (2 sqrt(nbar)); the global phase is
    exp(-+ (i t' sqrt(nbar)/2)(1 + 3/(4 nbar) - 1/(8 nbar^2))). Tangent-line
    coefficients, see the module docstring. Valid while t' stays small
    against nbar^{3/2}.
    """
    nbar = config.nbar
    if nbar <= 0:
        raise ValueError("coherent approximation needs nbar > 0")
    sgn = 1.0 if s == PointerSign.PLUS else -1.0
    root = math.sqrt(nbar)
    phase = cmath.exp(-0.5j * sgn * t_prime * root
                      * (1.0 + 0.75 / nbar - 0.125 / nbar ** 2))
    rot = cmath.exp(-1j * sgn * (t_prime / (2.0 * root)) * (1.0 - 0.25 / nbar))
    return CoherentApprox(global_phase=phase, nu_eff=config.nu * rot)


def to_pointer_basis(q: QubitState, phi: float) -> tuple[complex, complex]:
    """Coordinates of a qubit state on the initial pointer basis:
    alpha' = <+(t0)|q>, beta' = <-(t0)|q>."""
    half = phi / 2.0
    alpha_p = 1j * math.cos(half) * q.alpha + math.sin(half) * q.beta
    beta_p = -1j * math.sin(half) * q.alpha + math.cos(half) * q.beta
    return complex(alpha_p), complex(beta_p)


def coincidence_times(nbar: float, phi: float, k_max: int) -> list[tuple[float, QubitState]]:
    """State-preparation instants t' = (2j-1) pi sqrt(nbar), j = 1..k_max.

    At odd entries both pointer states merge into
    (i sin(phi/2 - pi/4), cos(phi/2 - pi/4)); at even entries the common
    state carries +pi/4 instead. Any initial qubit state disentangles from
    the field at these times.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if nbar <= 0:
        raise ValueError("coincidence times need nbar > 0")
    out = []
    root = math.sqrt(nbar)
    for j in range(1, k_max + 1):
        tp = (2 * j - 1) * math.pi * root
        shift = -math.pi / 4.0 if j % 2 == 1 else math.pi / 4.0
        ang = phi / 2.0 + shift
        out.append((tp, QubitState(1j * math.sin(ang), math.cos(ang) + 0.0j)))
    return out
