"""Acceptance gate: ten checks pinning the package to its reference behaviors.

Each criterion_N() is self-contained (reference parameters nbar = 50,
phi = pi/6, N_max = 150 baked in) and returns a CriterionResult; run_all()
drives the lot. tests/test_acceptance.py asserts on these results and the
CLI's verify scenario prints them, so the gate has exactly one
implementation.

Three criteria are expected to fail at their stated thresholds with the
formulas implemented faithfully; see the per-criterion docstrings. The
measured values are still reported so regressions stay visible.
"""
from __future__ import annotations

import filecmp
import math
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from .closedform import (correction_factor, overlap_sq_approx,
                         overlap_sq_short_time, rho12_closed,
                         rho12_pointer_start)
from .diagnostics import purity, q_from_rho, validity_horizon
from .dynamics import LOWER, UPPER, QubitState, evolve_product, reduce, rho_series
from .errors import DegenerateBranchError
from .fock import FieldVector, SimConfig, coherent, inner
from .oracle import OracleConfig, integrate
from .pointer import (PointerSign, env_pointer_exact, initial_pointer_states,
                      to_pointer_basis)
from .propagator import unitarity_defect

NBAR = 50.0
PHI = math.pi / 6.0
NMAX = 150
SEED = 20260818


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    measured: float
    threshold: float
    detail: str

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number:2d} [{tag}] {self.name}: {self.detail}"


def _field() -> FieldVector:
    return coherent(NBAR, PHI, NMAX)


def _random_states(rng: np.random.Generator, count: int) -> list[QubitState]:
    out = []
    for _ in range(count):
        z = rng.normal(size=4)
        out.append(QubitState.normalized(z[0] + 1j * z[1], z[2] + 1j * z[3]))
    return out


def _peaks(ts: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Local maxima with parabolic refinement -> (t*, y*) arrays."""
    out_t, out_y = [], []
    h = ts[1] - ts[0]
    for i in range(1, len(ys) - 1):
        if ys[i] >= ys[i - 1] and ys[i] >= ys[i + 1] and (ys[i] > ys[i - 1]
                                                          or ys[i] > ys[i + 1]):
            y0, y1, y2 = ys[i - 1], ys[i], ys[i + 1]
            denom = y0 - 2.0 * y1 + y2
            dx = 0.0
            if denom != 0.0:
                dx = max(-0.5, min(0.5, 0.5 * (y0 - y2) / denom))
            out_t.append(ts[i] + dx * h)
            out_y.append(y1 - 0.25 * (y0 - y2) * dx)
    return np.array(out_t), np.array(out_y)


def criterion_1() -> CriterionResult:
    """Propagator unitarity on the interior subspace at five times."""
    times = (1.0, 5.0, 10.0, 50.0, 100.0)
    worst = max(unitarity_defect(tp, NMAX) for tp in times)
    return CriterionResult(
        1, "propagator unitarity", worst < 1e-10, worst, 1e-10,
        f"max interior defect over t'={times} is {worst:.3e} (need < 1e-10)")


def criterion_2() -> CriterionResult:
    """Reduced state via evolve+reduce vs the direct series, 10 random starts."""
    field = _field()
    cfg = SimConfig(nbar=NBAR, phi=PHI, n_max=NMAX)
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for q in _random_states(rng, 10):
        for tp in np.linspace(0.0, 200.0, 200):
            a = reduce(evolve_product(q, field, float(tp)))
            b = rho_series(q, cfg, float(tp))
            worst = max(worst, abs(a.rho11 - b.rho11), abs(a.rho12 - b.rho12))
    return CriterionResult(
        2, "two-path equivalence", worst < 1e-10, worst, 1e-10,
        f"worst element mismatch over 10 states x 200 times is {worst:.3e} "
        "(need < 1e-10)")


def criterion_3() -> CriterionResult:
    """Analytic propagator vs the brute-force rotating-wave integrator."""
    field = _field()
    res = integrate(OracleConfig(), UPPER, field, [1.0, 3.0, 10.0])
    worst = 0.0
    for joint in res.states:
        ana = evolve_product(UPPER, field, joint.t_prime)
        worst = max(worst,
                    float(np.max(np.abs(joint.A.amps - ana.A.amps))),
                    float(np.max(np.abs(joint.B.amps - ana.B.amps))))
    return CriterionResult(
        3, "oracle equivalence", worst < 1e-6, worst, 1e-6,
        f"max per-amplitude difference up to t'=10 is {worst:.3e} "
        f"(need < 1e-6; norm drift {res.norm_drift:.2e}, "
        f"step {res.step_used:.2e})")


def criterion_4() -> CriterionResult:
    """Pointer-start coherence: closed form vs exact over [0, 200], plus the
    spacing of the exact curve's zeros against 4 pi sqrt(nbar)."""
    field = _field()
    q0, _ = initial_pointer_states(PHI)
    ts = np.linspace(0.0, 200.0, 2001)
    ex = np.empty_like(ts)
    cl = np.empty_like(ts)
    for i, tp in enumerate(ts):
        ex[i] = abs(reduce(evolve_product(q0, field, float(tp))).rho12)
        cl[i] = abs(rho12_pointer_start(PHI, NBAR, float(tp), PointerSign.PLUS))
    dev = float(np.max(np.abs(ex - cl)))

    # zeros of the exact curve: local minima below 0.02, merged into
    # clusters (gap > 5 starts a new one); compare alternate-cluster spacing
    raw = [float(ts[i]) for i in range(1, len(ts) - 1)
           if ex[i] <= ex[i - 1] and ex[i] <= ex[i + 1] and ex[i] < 0.02]
    clusters: list[list[float]] = []
    for z in raw:
        if clusters and z - clusters[-1][-1] <= 5.0:
            clusters[-1].append(z)
        else:
            clusters.append([z])
    centers = [sum(c) / len(c) for c in clusters]
    target = 4.0 * math.pi * math.sqrt(NBAR)
    spacings = [b - a for a, b in zip(centers, centers[2:])]
    zero_dev = max((abs(s - target) for s in spacings), default=math.inf)
    passed = dev < 0.03 and zero_dev < 2.0
    return CriterionResult(
        4, "pointer-start coherence decay", passed, dev, 0.03,
        f"max |exact - closed| over [0,200] is {dev:.4f} (need < 0.03); "
        f"alternate zero spacing off {target:.3f} by {zero_dev:.3f} (need < 2)")


def criterion_5() -> CriterionResult:
    """Lower-state start: envelope of the pointer-expansion closed form vs
    the exact coherence envelope for t' <= 10 (peak interpolation; the
    internal oscillation phase is excluded by construction)."""
    field = _field()
    ap, bp = to_pointer_basis(LOWER, PHI)
    ts = np.arange(0.0, 10.0001, 0.005)
    ex = np.empty_like(ts)
    cl = np.empty_like(ts)
    for i, tp in enumerate(ts):
        ex[i] = abs(reduce(evolve_product(LOWER, field, float(tp))).rho12)
        cl[i] = abs(rho12_closed(ap, bp, PHI, NBAR, float(tp)))

    def envelope(ys: np.ndarray) -> np.ndarray:
        pk_t, pk_y = _peaks(ts, ys)
        env = np.interp(ts, pk_t, pk_y)
        env[ts < pk_t[0]] = ys[ts < pk_t[0]]
        env[ts > pk_t[-1]] = ys[ts > pk_t[-1]]
        return env

    diff = float(np.max(np.abs(envelope(ex) - envelope(cl))))
    return CriterionResult(
        5, "general-start coherence envelope", diff < 0.05, diff, 0.05,
        f"max envelope difference over [0,10] is {diff:.4f} (need < 0.05)")


def _overlap_sq_exact(tp: float) -> float:
    cfg = SimConfig(nbar=NBAR, phi=PHI, n_max=NMAX)
    plus = env_pointer_exact(cfg, tp, PointerSign.PLUS)
    minus = env_pointer_exact(cfg, tp, PointerSign.MINUS)
    return abs(inner(minus, plus)) ** 2


def criterion_6() -> CriterionResult:
    """Field pointer overlap law. The short-time Gaussian clause holds; the
    1e-2 relative clause does not: the periodic closed form omits the
    quadratic spread of sqrt(n+1)+sqrt(n) around the Poisson peak, which
    contributes ~3e-2 relative by t' = 2 at nbar = 50 for any choice of
    linearization coefficients. Expected FAIL, kept faithful."""
    e1 = _overlap_sq_exact(1.0)
    gauss = float(overlap_sq_short_time(NBAR, 1.0))
    d_gauss = abs(gauss - e1)
    worst_rel = 0.0
    for tp in np.linspace(0.01, 2.0, 400):
        e = _overlap_sq_exact(float(tp))
        a = float(overlap_sq_approx(NBAR, float(tp)))
        worst_rel = max(worst_rel, abs(e - a) / e)
    passed = d_gauss < 5e-3 and worst_rel < 1e-2
    return CriterionResult(
        6, "overlap law", passed, worst_rel, 1e-2,
        f"short-time Gaussian at t'=1 off exact by {d_gauss:.3e} (need < 5e-3); "
        f"closed |overlap|^2 worst relative error on (0,2] is {worst_rel:.3e} "
        "(need < 1e-2)")


def criterion_7() -> CriterionResult:
    """Entanglement horizon for a plus-pointer start. The linear-in-nbar
    growth clause holds; the flat |q| >= 0.99 clause does not: the exact
    trajectory carries a fast vacuum-scale ripple that dips q to ~0.967
    near t' = 0.2 before recovering. Expected FAIL, kept faithful."""
    field = _field()
    q0, _ = initial_pointer_states(PHI)
    qmin = math.inf
    for tp in np.arange(0.0, 5.0001, 0.05):
        try:
            q = q_from_rho(reduce(evolve_product(q0, field, float(tp))))
        except DegenerateBranchError:
            continue
        qmin = min(qmin, q)

    nbars = np.array([25.0, 50.0, 100.0])
    horizons = np.array([validity_horizon(nb, PHI) for nb in nbars])
    slope, intercept = np.polyfit(nbars, horizons, 1)
    fit = slope * nbars + intercept
    ss_res = float(np.sum((horizons - fit) ** 2))
    ss_tot = float(np.sum((horizons - np.mean(horizons)) ** 2))
    r2 = 1.0 - ss_res / ss_tot
    growth_ok = r2 > 0.9 and slope > 0.0
    passed = qmin >= 0.99 and growth_ok
    hor_txt = ", ".join(f"{nb:g}: {h:.2f}" for nb, h in zip(nbars, horizons))
    return CriterionResult(
        7, "entanglement horizon", passed, qmin, 0.99,
        f"min |q| on [0,5] is {qmin:.6f} (need >= 0.99); horizons {{{hor_txt}}} "
        f"fit slope {slope:.3f}, R^2 {r2:.4f} (need R^2 > 0.9)")


def criterion_8() -> CriterionResult:
    """Purity recovery at the first coincidence time for random starts."""
    field = _field()
    t1 = math.pi * math.sqrt(NBAR)
    rng = np.random.default_rng(SEED)
    worst = min(purity(reduce(evolve_product(q, field, t1)))
                for q in _random_states(rng, 10))
    return CriterionResult(
        8, "state preparation purity", worst > 0.95, worst, 0.95,
        f"min purity over 10 random states at t'={t1:.3f} is {worst:.6f} "
        "(need > 0.95)")


def criterion_9() -> CriterionResult:
    """Coherence correction factor vs the direct Poisson-weighted sum.
    The Gaussian modulus omits the quadratic term of sqrt(n+1)-sqrt(n),
    whose accumulated effect crosses 1e-3 near t' = 47 and reaches ~3e-3
    at t' = 100 for nbar = 50. Expected FAIL, kept faithful."""
    probs = np.abs(coherent(NBAR, 0.0, NMAX).amps) ** 2
    n = np.arange(NMAX + 1)
    gaps = np.sqrt(n + 1.0) - np.sqrt(n)
    worst = 0.0
    t_worst = 0.0
    for tp in np.linspace(0.0, 100.0, 2001):
        direct = abs(complex(np.sum(probs * np.exp(-1j * tp * gaps))))
        err = abs(direct - abs(correction_factor(NBAR, float(tp))))
        if err > worst:
            worst, t_worst = err, float(tp)
    return CriterionResult(
        9, "correction-factor fidelity", worst < 1e-3, worst, 1e-3,
        f"max modulus error over [0,100] is {worst:.3e} at t'={t_worst:.2f} "
        "(need < 1e-3)")


def criterion_10() -> CriterionResult:
    """Byte-identical CSV from two identical figure-scenario runs."""
    from . import cli  # deferred: cli imports this module for 'verify'

    with tempfile.TemporaryDirectory() as tmp:
        p1 = os.path.join(tmp, "run1.csv")
        p2 = os.path.join(tmp, "run2.csv")
        rc1 = cli.main(["figure2", "--output", p1])
        rc2 = cli.main(["figure2", "--output", p2])
        same = rc1 == 0 and rc2 == 0 and filecmp.cmp(p1, p2, shallow=False)
        size = os.path.getsize(p1)
    return CriterionResult(
        10, "CSV determinism", same, 0.0 if same else 1.0, 0.0,
        f"two figure2 runs byte-identical: {same} ({size} bytes)")


def run_all() -> list[CriterionResult]:
    return [criterion_1(), criterion_2(), criterion_3(), criterion_4(),
            criterion_5(), criterion_6(), criterion_7(), criterion_8(),
            criterion_9(), criterion_10()]
