"""Truncated Fock-space representation of the single field mode.

States live on the basis |0>..|n_max> as dense complex amplitude arrays.
Truncation is never silent: construction reports the Poisson tail mass left
outside the cutoff, and downstream operators record boundary leakage.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TruncationError

# Poisson tail mass allowed outside the cutoff at construction time.
TAIL_GUARD = 1e-8


def default_n_max(nbar: float) -> int:
    """Cutoff rule keeping the coherent tail below ~1e-10 up to nbar ~ 1e4."""
    return int(math.ceil(nbar + 10.0 * math.sqrt(max(nbar, 0.0)) + 10.0))


@dataclass(frozen=True)
class FieldVector:
    """Complex amplitudes over |0>..|n_max| plus truncation bookkeeping.

    tail_mass is the probability the untruncated state carries beyond n_max;
    leakage accumulates squared amplitude dropped at the boundary by
    tridiagonal operators applied to this vector's ancestry.
    """

    amps: np.ndarray
    n_max: int
    tail_mass: float = 0.0
    leakage: float = 0.0

    def __post_init__(self):
        a = np.array(self.amps, dtype=np.complex128)
        if a.ndim != 1 or a.shape[0] != self.n_max + 1:
            raise ValueError(
                f"amps must have length n_max + 1 = {self.n_max + 1}, got {a.shape}"
            )
        a.flags.writeable = False
        object.__setattr__(self, "amps", a)

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def norm(self) -> float:
        return math.sqrt(self.norm_sq())


@dataclass(frozen=True)
class SimConfig:
    """Physical and numerical parameters of a run.

    Times are dimensionless, t' = g*t. The truncation rule n_max >= nbar +
    8*sqrt(nbar) is enforced at construction; the default cutoff is
    default_n_max(nbar).
    """

    nbar: float
    phi: float
    g: float = 1.0
    n_max: int | None = None
    t_prime_grid: tuple = ()

    def __post_init__(self):
        if self.g <= 0:
            raise ValueError("coupling g must be positive")
        if self.nbar < 0:
            raise ValueError("nbar must be nonnegative")
        if self.n_max is None:
            object.__setattr__(self, "n_max", default_n_max(self.nbar))
        floor = self.nbar + 8.0 * math.sqrt(self.nbar)
        if self.n_max < floor:
            raise TruncationError(
                f"n_max={self.n_max} below tail-mass floor {floor:.1f} for nbar={self.nbar}"
            )
        grid = tuple(float(t) for t in self.t_prime_grid)
        if any(t < 0 for t in grid):
            raise ValueError("t' grid must be nonnegative")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("t' grid must be strictly increasing")
        object.__setattr__(self, "t_prime_grid", grid)

    @property
    def nu(self) -> complex:
        """Coherent-state parameter sqrt(nbar) e^{-i phi}."""
        return math.sqrt(self.nbar) * complex(math.cos(self.phi), -math.sin(self.phi))


def coherent(nbar: float, phi: float, n_max: int | None = None) -> FieldVector:
    """Coherent-state coefficients c_n = e^{-nbar/2} nu^n / sqrt(n!).

    Moduli are evaluated in the log domain, exp(0.5*(n ln nbar - nbar -
    lgamma(n+1))), so the Poisson weights stay finite far past n = 170;
    the phase e^{-i n phi} is attached separately. Returns the truncated,
    unnormalized coefficients with their tail mass.
    """
    if nbar < 0:
        raise ValueError("nbar must be nonnegative")
    if n_max is None:
        n_max = default_n_max(nbar)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    n = np.arange(n_max + 1)
    if nbar == 0:
        amps = np.zeros(n_max + 1, dtype=np.complex128)
        amps[0] = 1.0
        tail = 0.0
    else:
        log_mod = 0.5 * (n * math.log(nbar) - nbar - np.array([math.lgamma(k + 1.0) for k in range(n_max + 1)]))
        amps = np.exp(log_mod) * np.exp(-1j * phi * n)
        tail = 1.0 - float(np.sum(np.exp(2.0 * log_mod)))
    tail = max(tail, 0.0)
    if tail > TAIL_GUARD:
        raise TruncationError(
            f"n_max={n_max} leaves coherent tail mass {tail:.3e} > {TAIL_GUARD:.0e} at nbar={nbar}"
        )
    return FieldVector(amps=amps, n_max=n_max, tail_mass=tail)


def inner(u: FieldVector, v: FieldVector) -> complex:
    """Hermitian inner product sum conj(u_n) v_n."""
    if u.n_max != v.n_max:
        raise ValueError(f"mismatched truncation: {u.n_max} vs {v.n_max}")
    return complex(np.vdot(u.amps, v.amps))
