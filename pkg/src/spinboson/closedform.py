"""Closed-form coherence and overlap expressions for coherent-field starts.

Everything here is an approximation with a known domain, so every return
value carries a Validity tag (see regimes). Two families appear:

* correction family, valid while t' stays small against nbar^{3/2}: the
  slow Gaussian suppression exp(-t'^2/(32 nbar^2)) and the field-overlap
  forms built on the tangent linearization of sqrt(n+1)+sqrt(n) at the
  Poisson peak (coefficients 1 + 3/(4 nbar) - 1/(8 nbar^2) for the global
  phase and 1 - 1/(4 nbar) for the rotation rate);
* pointer-basis family, valid while t' stays small against sqrt(nbar):
  expressions that keep only the pointer-product cross term.

The tags are advisory; no function here refuses to evaluate outside its
domain.
"""
from __future__ import annotations

import cmath
import math

from .pointer import PointerSign, pointer_angles
from .regimes import Validity, correction_validity, pointer_basis_validity


class TaggedComplex(complex):
    """Complex number carrying a validity tag.

    Arithmetic degrades to plain complex; read .validity before trusting
    the value far from t' = 0.
    """

    validity: Validity

    def __new__(cls, value: complex, validity: Validity) -> "TaggedComplex":
        obj = super().__new__(cls, value)
        obj.validity = validity
        return obj


class TaggedFloat(float):
    """Real-valued counterpart of TaggedComplex."""

    validity: Validity

    def __new__(cls, value: float, validity: Validity) -> "TaggedFloat":
        obj = super().__new__(cls, value)
        obj.validity = validity
        return obj


def correction_factor(nbar: float, t_prime: float) -> TaggedComplex:
    """Multiplicative decay of the initial coherence for a pointer start:
    exp(-i t'/(2 sqrt(nbar))) exp(-t'^2/(32 nbar^2))."""
    if nbar <= 0:
        raise ValueError("correction factor needs nbar > 0")
    phase = cmath.exp(-0.5j * t_prime / math.sqrt(nbar))
    decay = math.exp(-t_prime ** 2 / (32.0 * nbar ** 2))
    return TaggedComplex(phase * decay, correction_validity(nbar, t_prime))


def rho12_pointer_start(phi: float, nbar: float, t_prime: float,
                        s: PointerSign) -> TaggedComplex:
    """Coherence rho12(t') when the qubit starts in a pointer state:
    -+ (i/2) sin(phi +- t'/(2 sqrt(nbar))) exp(-t'^2/(32 nbar^2))."""
    if nbar <= 0:
        raise ValueError("needs nbar > 0")
    decay = math.exp(-t_prime ** 2 / (32.0 * nbar ** 2))
    drift = t_prime / (2.0 * math.sqrt(nbar))
    if s == PointerSign.PLUS:
        val = -0.5j * math.sin(phi + drift) * decay
    else:
        val = 0.5j * math.sin(phi - drift) * decay
    return TaggedComplex(val, correction_validity(nbar, t_prime))


def cross_term_factors(phi: float, nbar: float,
                       t_prime: float) -> tuple[TaggedComplex, TaggedComplex]:
    """Qubit-side factors of the two pointer cross terms:
    (-i cos(theta_plus) cos(theta_minus), +i sin(theta_plus) sin(theta_minus)),
    both damped by exp(-t'^2/(64 nbar^2)). Their sum telescopes to
    -i cos(phi) exp(-t'^2/(64 nbar^2)) because theta_plus + theta_minus = phi.
    """
    ang = pointer_angles(phi, nbar, t_prime)
    damp = math.exp(-t_prime ** 2 / (64.0 * nbar ** 2))
    tag = correction_validity(nbar, t_prime)
    ct1 = TaggedComplex(-1j * math.cos(ang.theta_plus) * math.cos(ang.theta_minus) * damp, tag)
    ct2 = TaggedComplex(1j * math.sin(ang.theta_plus) * math.sin(ang.theta_minus) * damp, tag)
    return ct1, ct2


def env_overlap_approx(nbar: float, t_prime: float) -> TaggedComplex:
    """Overlap <Phi_minus(t)|Phi_plus(t)> of the two field pointer states,
    evaluated on the Poisson weights with the tangent linearization:

        exp(-i t' sqrt(nbar) (1 + 3/(4 nbar) - 1/(8 nbar^2)))
        * exp(nbar (exp(-i (t'/sqrt(nbar)) (1 - 1/(4 nbar))) - 1))

    Periodic revivals at t' = 2 pi k sqrt(nbar)/(1 - 1/(4 nbar)) are a
    feature of the linearization; the exact overlap revives only partially.
    """
    if nbar <= 0:
        raise ValueError("needs nbar > 0")
    root = math.sqrt(nbar)
    lead = cmath.exp(-1j * t_prime * root * (1.0 + 0.75 / nbar - 0.125 / nbar ** 2))
    gen = cmath.exp(nbar * (cmath.exp(-1j * (t_prime / root) * (1.0 - 0.25 / nbar)) - 1.0))
    return TaggedComplex(lead * gen, correction_validity(nbar, t_prime))


def overlap_sq_approx(nbar: float, t_prime: float) -> TaggedFloat:
    """|<Phi_minus|Phi_plus>|^2 in closed form:
    exp(-4 nbar sin^2((t'/(2 sqrt(nbar))) (1 - 1/(4 nbar))))."""
    if nbar <= 0:
        raise ValueError("needs nbar > 0")
    arg = (t_prime / (2.0 * math.sqrt(nbar))) * (1.0 - 0.25 / nbar)
    val = math.exp(-4.0 * nbar * math.sin(arg) ** 2)
    return TaggedFloat(val, correction_validity(nbar, t_prime))


def overlap_sq_short_time(nbar: float, t_prime: float) -> TaggedFloat:
    """Short-time Gaussian limit of overlap_sq_approx:
    exp(-t'^2 (1 - 1/(4 nbar))^2). Additionally needs t' well below
    sqrt(nbar), hence the tighter validity family."""
    if nbar <= 0:
        raise ValueError("needs nbar > 0")
    val = math.exp(-(t_prime ** 2) * (1.0 - 0.25 / nbar) ** 2)
    return TaggedFloat(val, pointer_basis_validity(nbar, t_prime))


def rho12_closed(alpha_p: complex, beta_p: complex, phi: float, nbar: float,
                 t_prime: float) -> TaggedComplex:
    """Coherence for a general start expanded over the two pointer products.

    alpha_p, beta_p are the pointer-basis coordinates from
    pointer.to_pointer_basis. Diagonal terms reuse rho12_pointer_start;
    cross terms pair cross_term_factors with the full field overlap (not its
    Gaussian limit), which keeps the expression usable out to the
    correction-family horizon.
    """
    d_plus = rho12_pointer_start(phi, nbar, t_prime, PointerSign.PLUS)
    d_minus = rho12_pointer_start(phi, nbar, t_prime, PointerSign.MINUS)
    ct1, ct2 = cross_term_factors(phi, nbar, t_prime)
    ov = env_overlap_approx(nbar, t_prime)
    val = (abs(alpha_p) ** 2 * complex(d_plus)
           + abs(beta_p) ** 2 * complex(d_minus)
           + alpha_p * beta_p.conjugate() * complex(ct1) * complex(ov)
           + beta_p * alpha_p.conjugate() * complex(ct2) * complex(ov).conjugate())
    return TaggedComplex(val, correction_validity(nbar, t_prime))


def rho12_pointer_basis(alpha_p: complex, beta_p: complex, nbar: float,
                        t_prime: float) -> TaggedComplex:
    """Coherence between the two pointer branches themselves:
    alpha' conj(beta') <Phi_minus|Phi_plus>. Meaningful only while the
    branches stay product-like, i.e. t' well below sqrt(nbar)."""
    ov = env_overlap_approx(nbar, t_prime)
    return TaggedComplex(alpha_p * beta_p.conjugate() * complex(ov),
                         pointer_basis_validity(nbar, t_prime))
