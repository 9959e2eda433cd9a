"""Exception types shared across the package.

Numerical-guard failures (truncation, integrator, singular configurations)
derive from SpinBosonError so callers can distinguish them from plain
usage errors (ValueError).
"""


class SpinBosonError(Exception):
    """Base class for numerical-guard failures."""


class TruncationError(SpinBosonError):
    """Fock-space cutoff too small: tail mass or boundary leakage above guard."""


class IntegratorError(SpinBosonError):
    """Step-halving ladder failed to converge to the requested tolerance."""


class PoleError(SpinBosonError):
    """G(t) evaluated at a pole of cot/tan; the pointer state momentarily
    lies along a bare qubit level and the parallelism ratio diverges."""


class DegenerateBranchError(SpinBosonError):
    """Entanglement measure undefined: a branch vector has zero norm, or the
    reduced state sits exactly on a sigma_z eigenstate (rho11 in {0, 1})."""
