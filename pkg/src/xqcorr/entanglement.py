"""Wootters concurrence of two-qubit states.

The X family admits closed-form eigenvalues for the spin-flipped product
rho * rho~; those sit next to a general matrix route (any valid density
matrix) and the two are cross-checked against each other, never merged.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NegativeSpectrum
from .linalg import SIGMA2, dag, kron, validate_density_matrix
from .xstate import XStateParams, to_density_matrix, validate_physical

PRODUCT_EIG_FLOOR = -1e-8


@dataclass(frozen=True)
class ConcurrenceBreakdown:
    """Concurrence with the descending square-rooted product spectrum behind it."""

    sqrt_lambdas: tuple[float, float, float, float]
    value: float


def _breakdown(sqrt_vals) -> ConcurrenceBreakdown:
    ordered = sorted((float(v) for v in sqrt_vals), reverse=True)
    value = max(0.0, ordered[0] - ordered[1] - ordered[2] - ordered[3])
    return ConcurrenceBreakdown(sqrt_lambdas=tuple(ordered), value=value)


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """(sigma2 x sigma2) conj(rho) (sigma2 x sigma2), conjugation entrywise."""
    yy = kron(SIGMA2, SIGMA2)
    return yy @ np.conj(rho) @ yy


def rho_rhotilde_spectrum_closed(p: XStateParams) -> tuple[float, float, float, float]:
    """Eigenvalues of rho * spin_flip(rho) for an X state, closed form.

    Returned in formula order: the (c1 - c2 -/+ root) pair first, then the
    (c1 + c2 -/+ root) pair.  Each is a perfect square, so nonnegative by
    construction.
    """
    validate_physical(p)
    # radicands are >= (c1 -/+ c2)^2 for physical params; floor only guards
    # float jitter at the physicality boundary
    rad_a = max((1.0 + p.c3) ** 2 - (p.r + p.s) ** 2, 0.0)
    rad_b = max((1.0 - p.c3) ** 2 - (p.r - p.s) ** 2, 0.0)
    root_a = math.sqrt(rad_a)
    root_b = math.sqrt(rad_b)
    return (
        (p.c1 - p.c2 - root_a) ** 2 / 16.0,
        (p.c1 - p.c2 + root_a) ** 2 / 16.0,
        (p.c1 + p.c2 - root_b) ** 2 / 16.0,
        (p.c1 + p.c2 + root_b) ** 2 / 16.0,
    )


def concurrence_closed(p: XStateParams) -> ConcurrenceBreakdown:
    """Concurrence of an X state from the closed-form product spectrum."""
    lams = rho_rhotilde_spectrum_closed(p)
    return _breakdown(math.sqrt(lam) for lam in lams)


def concurrence_general(rho: np.ndarray) -> ConcurrenceBreakdown:
    """Concurrence of an arbitrary two-qubit density matrix.

    Uses the Hermitian equivalent sqrt(rho) * rho~ * sqrt(rho), whose
    spectrum matches that of rho * rho~ but stays real under a symmetric
    eigensolver.
    """
    rho = validate_density_matrix(rho)
    w, v = np.linalg.eigh(rho)
    sqrt_rho = (v * np.sqrt(np.clip(w, 0.0, None))) @ dag(v)
    product = sqrt_rho @ spin_flip(rho) @ sqrt_rho
    lams = np.linalg.eigvalsh(product)
    if lams[0] < PRODUCT_EIG_FLOOR:
        raise NegativeSpectrum(
            f"product spectrum has eigenvalue {lams[0]:.3e} below {PRODUCT_EIG_FLOOR:.1e}"
        )
    return _breakdown(np.sqrt(np.clip(lams, 0.0, None)))
