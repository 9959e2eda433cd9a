"""Exact resonance dynamics of a qubit coupled to one quantized field mode.

The package solves the rotating-wave dynamics at resonance in closed form
on a truncated Fock space, exposes the time-dependent pointer states and
decoherence measures of the reduced qubit, and cross-checks every closed
form against a brute-force integrator. See the module docstrings for the
physics conventions; all times are dimensionless t' = g t.
"""

from .closedform import (TaggedComplex, TaggedFloat, correction_factor,
                         cross_term_factors, env_overlap_approx,
                         overlap_sq_approx, overlap_sq_short_time,
                         rho12_closed, rho12_pointer_basis,
                         rho12_pointer_start)
from .diagnostics import (EntanglementReport, purity, q_from_joint,
                          q_from_rho, validity_horizon)
from .dynamics import (LOWER, UPPER, DensityMatrix2, JointState, QubitState,
                       evolve_product, population_inversion, reduce,
                       rho_series)
from .errors import (DegenerateBranchError, IntegratorError, PoleError,
                     SpinBosonError, TruncationError)
from .fock import FieldVector, SimConfig, coherent, default_n_max, inner
from .oracle import OracleConfig, OracleResult, integrate, rwa_error
from .pointer import (CoherentApprox, PointerAngles, PointerSign,
                      coincidence_times, env_pointer_coherent_approx,
                      env_pointer_exact, g_scalar, initial_pointer_states,
                      pointer_angles, pointer_state_at, to_pointer_basis)
from .propagator import (BandCoeffs, apply_block, band_coeffs, full_matrix,
                         unitarity_defect)
from .regimes import Validity

__version__ = "0.1.0"

__all__ = [
    "BandCoeffs", "CoherentApprox", "DegenerateBranchError", "DensityMatrix2",
    "EntanglementReport", "FieldVector", "IntegratorError", "JointState",
    "LOWER", "OracleConfig", "OracleResult", "PointerAngles", "PointerSign",
    "PoleError", "QubitState", "SimConfig", "SpinBosonError", "TaggedComplex",
    "TaggedFloat", "TruncationError", "UPPER", "Validity", "apply_block",
    "band_coeffs", "coherent", "coincidence_times", "correction_factor",
    "cross_term_factors", "default_n_max", "env_overlap_approx",
    "env_pointer_coherent_approx", "env_pointer_exact", "evolve_product",
    "full_matrix", "g_scalar", "initial_pointer_states", "inner", "integrate",
    "overlap_sq_approx", "overlap_sq_short_time", "pointer_angles",
    "pointer_state_at", "population_inversion", "purity", "q_from_joint",
    "q_from_rho", "reduce", "rho12_closed", "rho12_pointer_basis",
    "rho12_pointer_start", "rho_series", "rwa_error", "to_pointer_basis",
    "unitarity_defect", "validity_horizon",
]
