"""Exact joint evolution of qubit-times-coherent product states, plus the
reduced density matrix of the qubit by two independent routes.

Route one applies the propagator's band structure directly to the field
coefficients. Route two evaluates the reduced matrix elements as explicit
sums over the photon distribution. The two must agree to float accuracy;
the test suite pins that equivalence, so each route guards the other
against transcription slips.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TruncationError
from .fock import FieldVector, SimConfig, coherent, inner
from .propagator import EDGE_GUARD


@dataclass(frozen=True)
class QubitState:
    """Amplitudes (alpha on the upper level |a>, beta on the lower |b>)."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        nrm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(nrm - 1.0) > 1e-12:
            raise ValueError(f"qubit state not normalized: |alpha|^2+|beta|^2 = {nrm!r}")

    @staticmethod
    def normalized(alpha: complex, beta: complex) -> "QubitState":
        nrm = math.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        if nrm == 0.0:
            raise ValueError("zero qubit amplitudes")
        return QubitState(alpha / nrm, beta / nrm)


UPPER = QubitState(1.0 + 0.0j, 0.0j)
LOWER = QubitState(0.0j, 1.0 + 0.0j)


@dataclass(frozen=True)
class JointState:
    """Global pure state A|a> + B|b> with branch field vectors A, B."""

    A: FieldVector
    B: FieldVector
    t_prime: float

    def __post_init__(self):
        if self.A.n_max != self.B.n_max:
            raise ValueError("branch vectors must share a truncation")
        total = self.A.norm_sq() + self.B.norm_sq()
        slack = self.A.tail_mass + self.B.tail_mass + self.A.leakage + self.B.leakage
        if abs(total - 1.0) > 1e-9 + slack:
            raise ValueError(f"joint norm {total!r} departs from 1 beyond truncation slack")


@dataclass(frozen=True)
class DensityMatrix2:
    """Reduced qubit density matrix; rho22 = 1 - rho11 and rho21 implied."""

    rho11: float
    rho12: complex

    def __post_init__(self):
        if not -1e-9 <= self.rho11 <= 1.0 + 1e-9:
            raise ValueError(f"rho11 out of range: {self.rho11!r}")
        bound = self.rho11 * (1.0 - self.rho11)
        if abs(self.rho12) ** 2 > bound + 1e-12:
            raise ValueError("positivity violated: |rho12|^2 > rho11 rho22")

    @property
    def rho22(self) -> float:
        return 1.0 - self.rho11


def _check_edge(field: FieldVector):
    peak = float(np.max(np.abs(field.amps)))
    if peak > 0.0 and float(np.max(np.abs(field.amps[-3:]))) > EDGE_GUARD * peak:
        raise TruncationError("initial field has weight at the cutoff; increase n_max")


def _trig(n_max: int, t_prime: float):
    n = np.arange(n_max + 1)
    return (np.sin(t_prime * np.sqrt(n)), np.sin(t_prime * np.sqrt(n + 1.0)),
            np.cos(t_prime * np.sqrt(n)), np.cos(t_prime * np.sqrt(n + 1.0)))


def evolve_product(q: QubitState, field: FieldVector, t_prime: float) -> JointState:
    """Evolve the product state (alpha|a> + beta|b>) (x) field to time t'.

    Branch amplitudes mix each c_n with its neighbors c_{n-1}, c_{n+1}
    weighted by (alpha +- beta)/2; the conventions c_{-1} = 0 and
    c_{n_max+1} = 0 close the truncated system.
    """
    _check_edge(field)
    c = field.amps
    n_max = field.n_max
    s_n, s_n1, k_n, k_n1 = _trig(n_max, t_prime)
    cm1 = np.zeros_like(c)
    cm1[1:] = c[:-1]
    cp1 = np.zeros_like(c)
    cp1[:-1] = c[1:]
    u = 0.5 * (q.alpha + q.beta)
    v = 0.5 * (q.alpha - q.beta)
    a = -1j * v * cm1 * s_n + c * (u * k_n + v * k_n1) - 1j * u * cp1 * s_n1
    b = -1j * v * cm1 * s_n + c * (u * k_n - v * k_n1) + 1j * u * cp1 * s_n1
    # weight pushed past the cutoff by the up-band (identical in both branches)
    leak = abs(v * math.sin(t_prime * math.sqrt(n_max + 1.0)) * c[-1]) ** 2
    mk = lambda amps: FieldVector(amps=amps, n_max=n_max,
                                  tail_mass=field.tail_mass, leakage=field.leakage + leak)
    return JointState(A=mk(a), B=mk(b), t_prime=t_prime)


def reduce(joint: JointState) -> DensityMatrix2:
    """Trace out the field: rho11 = ||A||^2, rho12 = <B|A>."""
    return DensityMatrix2(rho11=joint.A.norm_sq(), rho12=inner(joint.B, joint.A))


def rho_series(q: QubitState, config: SimConfig, t_prime: float) -> DensityMatrix2:
    """Reduced density matrix as explicit sums over the photon distribution.

    The mixing weights are gamma = |alpha-beta|^2/4, delta = |alpha+beta|^2/4
    and lambda = (|alpha|^2 - |beta|^2 + alpha beta* - beta alpha*)/4; the
    attached sums combine |c_n|^2 and nearest-neighbor cross products with
    the same truncation conventions as evolve_product.
    """
    c = coherent(config.nbar, config.phi, config.n_max).amps
    s_n, s_n1, k_n, k_n1 = _trig(config.n_max, t_prime)
    cm1 = np.zeros_like(c)
    cm1[1:] = c[:-1]
    cp1 = np.zeros_like(c)
    cp1[:-1] = c[1:]
    alpha, beta = q.alpha, q.beta
    gam = 0.25 * abs(alpha - beta) ** 2
    dlt = 0.25 * abs(alpha + beta) ** 2
    lam = 0.25 * (abs(alpha) ** 2 - abs(beta) ** 2
                  + alpha * np.conj(beta) - beta * np.conj(alpha))
    ac = np.abs(c) ** 2
    acm1 = np.abs(cm1) ** 2
    acp1 = np.abs(cp1) ** 2
    f0 = np.sum(acm1 * s_n ** 2
                + 1j * (cm1 * c.conj() + cm1.conj() * c) * s_n * k_n1
                - ac * k_n1 ** 2)
    f1 = np.sum(ac * k_n ** 2
                - 1j * (c * cp1.conj() + c.conj() * cp1) * k_n * s_n1
                - acp1 * s_n1 ** 2)
    f2 = np.sum(-1j * cm1 * c.conj() * s_n * k_n
                - cm1 * cp1.conj() * s_n * s_n1
                - 1j * c * cp1.conj() * s_n1 * k_n1)
    f3 = np.sum(1j * c * cm1.conj() * s_n * k_n
                + cp1 * cm1.conj() * s_n * s_n1
                + 1j * cp1 * c.conj() * s_n1 * k_n1)
    f4 = np.sum(ac * k_n * k_n1)
    g0 = np.sum(acm1 * s_n ** 2
                + 1j * (c * cm1.conj() - c.conj() * cm1) * s_n * k_n1
                + ac * k_n1 ** 2)
    g1 = np.sum(ac * k_n ** 2
                + 1j * (c * cp1.conj() - c.conj() * cp1) * k_n * s_n1
                + acp1 * s_n1 ** 2)
    g2 = np.sum(-1j * cm1 * c.conj() * s_n * k_n
                + cm1 * cp1.conj() * s_n * s_n1
                + ac * k_n * k_n1
                + 1j * c * cp1.conj() * s_n1 * k_n1)
    rho12 = gam * f0 + dlt * f1 + lam * f2 + np.conj(lam) * f3 + (lam - np.conj(lam)) * f4
    rho11 = float(np.real(gam * g0 + dlt * g1 + lam * g2 + np.conj(lam) * np.conj(g2)))
    return DensityMatrix2(rho11=rho11, rho12=complex(rho12))


def population_inversion(q: QubitState, config: SimConfig, t_prime: float) -> float:
    """Occupation imbalance W = rho11 - rho22, trace-normalized.

    Normalizing by ||A||^2 + ||B||^2 instead of assuming unit trace keeps
    W(0) exactly +-1 for level starts despite the truncated tail.
    """
    field = coherent(config.nbar, config.phi, config.n_max)
    joint = evolve_product(q, field, t_prime)
    na = joint.A.norm_sq()
    nb = joint.B.norm_sq()
    return (na - nb) / (na + nb)
