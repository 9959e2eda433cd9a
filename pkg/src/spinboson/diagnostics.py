"""Entanglement and decoherence diagnostics.

Two routes to the branch-parallelism measure q:

* q_from_joint divides the branch overlap by the branch norm after scaling
  with the pointer ratio G; it is signed (complex) and exceeds 1 in modulus
  whenever the branches beat against G.
* q_from_rho reads |rho12|/sqrt(rho11 rho22) off the reduced state; it is
  basis-free and bounded by 1.

The two agree exactly only while A = G B holds exactly (at t' = 0 for a
pointer start). On evolved states they differ by the fast vacuum-scale
ripple, up to ~0.09 at nbar = 50; tests pin that measured gap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import DensityMatrix2, JointState, evolve_product, reduce
from .errors import DegenerateBranchError
from .fock import SimConfig, coherent, inner
from .pointer import initial_pointer_states
from .regimes import Validity

_NORM_FLOOR = 1e-28


@dataclass(frozen=True)
class EntanglementReport:
    q_abs: float
    q_complex: complex
    t_prime: float
    validity: Validity


def _tag_for_q(q_abs: float) -> Validity:
    # |q| ~ 1 means the joint state is still close to a product: the
    # pointer-basis picture is trustworthy there and degrades with q.
    if q_abs >= 0.99:
        return Validity.INSIDE
    if q_abs >= 0.9:
        return Validity.MARGINAL
    return Validity.OUTSIDE


def q_from_joint(joint: JointState, g_val: complex) -> EntanglementReport:
    """q = G <A|B> / |A|^2 for the stacked branches of a joint state."""
    norm_a_sq = joint.A.norm_sq()
    if norm_a_sq <= _NORM_FLOOR:
        raise DegenerateBranchError("upper branch has (numerically) zero norm")
    q = g_val * inner(joint.A, joint.B) / norm_a_sq
    q_abs = abs(q)
    return EntanglementReport(q_abs=q_abs, q_complex=q, t_prime=joint.t_prime,
                              validity=_tag_for_q(q_abs))


def q_from_rho(rho: DensityMatrix2) -> float:
    """|rho12| / sqrt(rho11 rho22). Degenerate populations carry no
    coherence to normalize, so rho11 at 0 or 1 raises."""
    r11 = rho.rho11
    r22 = rho.rho22
    if r11 <= 0.0 or r22 <= 0.0:
        raise DegenerateBranchError(f"populations ({r11!r}, {r22!r}) pinned at an end")
    return abs(rho.rho12) / math.sqrt(r11 * r22)


def purity(rho: DensityMatrix2) -> float:
    """tr(rho^2) = rho11^2 + rho22^2 + 2 |rho12|^2 of the reduced state."""
    return rho.rho11 ** 2 + rho.rho22 ** 2 + 2.0 * abs(rho.rho12) ** 2


def validity_horizon(nbar: float, phi: float, threshold: float = 0.99,
                     t_max: float | None = None, step: float = 0.05) -> float:
    """Largest grid time with q_from_rho >= threshold for a plus-pointer start.

    Scans t' = 0, step, ... up to t_max (default 1.5 nbar) on the exact
    trajectory and returns the last point still above threshold; grid points
    with degenerate populations are skipped. The returned horizon grows at
    least linearly with nbar.
    """
    if t_max is None:
        t_max = 1.5 * nbar
    cfg = SimConfig(nbar=nbar, phi=phi)
    field = coherent(cfg.nbar, cfg.phi, cfg.n_max)
    q0, _ = initial_pointer_states(phi)
    last = 0.0
    for tp in np.arange(0.0, t_max + step / 2.0, step):
        joint = evolve_product(q0, field, float(tp))
        try:
            q = q_from_rho(reduce(joint))
        except DegenerateBranchError:
            continue
        if q >= threshold:
            last = float(tp)
    return last
