"""Validity tagging for closed-form approximations.

Every closed form in this package is an asymptotic expression with a stated
window of applicability measured against a characteristic time scale
(sqrt(nbar), nbar, or nbar^{3/2} in t' units). Results carry a Validity tag
instead of silently degrading: INSIDE below 0.1x the limit, MARGINAL up to
the limit itself, OUTSIDE beyond.
"""
from __future__ import annotations

import enum


class Validity(str, enum.Enum):
    INSIDE = "inside"
    MARGINAL = "marginal"
    OUTSIDE = "outside"


def validity_for(t_prime: float, limit: float) -> Validity:
    """Tag t' against a characteristic limit with the 0.1x / 1.0x thresholds."""
    if limit <= 0:
        return Validity.OUTSIDE
    if t_prime <= 0.1 * limit:
        return Validity.INSIDE
    if t_prime <= limit:
        return Validity.MARGINAL
    return Validity.OUTSIDE


def correction_validity(nbar: float, t_prime: float) -> Validity:
    """Window for the finite-nbar correction family: t' small vs nbar^{3/2}."""
    return validity_for(t_prime, nbar ** 1.5)


def pointer_basis_validity(nbar: float, t_prime: float) -> Validity:
    """Window for short-time pointer-basis forms: t' small vs sqrt(nbar)."""
    return validity_for(t_prime, nbar ** 0.5)


def horizon_validity(nbar: float, t_prime: float) -> Validity:
    """Window for pointer-state separability: t' small vs nbar."""
    return validity_for(t_prime, nbar)
