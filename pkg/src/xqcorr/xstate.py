"""The five-parameter family of two-qubit X states.

An X state keeps support only on the diagonal and anti-diagonal of the
computational-basis density matrix.  The family is coordinatized by the
longitudinal Bloch components (r, s) of the two qubits and the diagonal
correlation tensor (c1, c2, c3), all in [-1, 1].  Its spectrum and entropy
have closed forms, which the matrix-level routines in :mod:`xqcorr.linalg`
cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotAnXState, UnphysicalParams
from .linalg import ID2, SIGMA1, SIGMA2, SIGMA3, kron, shannon_entropy, validate_density_matrix

PHYSICALITY_TOL = 1e-10

_X_PATTERN_ZERO = [(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2)]
_X_ANTIDIAGONAL = [(0, 3), (1, 2), (2, 1), (3, 0)]


@dataclass(frozen=True)
class XStateParams:
    """Coordinates (r, s, c1, c2, c3) of an X state."""

    r: float
    s: float
    c1: float
    c2: float
    c3: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.r, self.s, self.c1, self.c2, self.c3)

    def as_dict(self) -> dict[str, float]:
        return {"r": self.r, "s": self.s, "c1": self.c1, "c2": self.c2, "c3": self.c3}

    @classmethod
    def from_dict(cls, record: dict) -> "XStateParams":
        return cls(r=float(record["r"]), s=float(record["s"]), c1=float(record["c1"]),
                   c2=float(record["c2"]), c3=float(record["c3"]))


@dataclass(frozen=True)
class XSpectrum:
    """Closed-form eigenvalues of an X state, grouped by 2x2 block."""

    u_plus: float
    u_minus: float
    v_plus: float
    v_minus: float

    def as_array(self) -> np.ndarray:
        return np.array([self.u_plus, self.u_minus, self.v_plus, self.v_minus])


def _spectrum_values(p: XStateParams) -> tuple[float, float, float, float]:
    du = math.sqrt((p.r - p.s) ** 2 + (p.c1 + p.c2) ** 2)
    dv = math.sqrt((p.r + p.s) ** 2 + (p.c1 - p.c2) ** 2)
    return (
        (1.0 - p.c3 + du) / 4.0,
        (1.0 - p.c3 - du) / 4.0,
        (1.0 + p.c3 + dv) / 4.0,
        (1.0 + p.c3 - dv) / 4.0,
    )


def is_physical(p: XStateParams) -> bool:
    """True iff all parameters are in [-1, 1] and the spectrum is nonnegative.

    Eigenvalues down to -1e-10 are accepted so that boundary states (pure
    Bell states, C = 1) survive floating-point jitter.
    """
    if any(not (-1.0 <= v <= 1.0) for v in p.as_tuple()):
        return False
    return all(v >= -PHYSICALITY_TOL for v in _spectrum_values(p))


def validate_physical(p: XStateParams) -> XStateParams:
    if not all(math.isfinite(v) for v in p.as_tuple()):
        raise UnphysicalParams(f"non-finite parameters {p.as_tuple()}")
    if not is_physical(p):
        raise UnphysicalParams(f"parameters {p.as_tuple()} are not a physical X state")
    return p


def spectrum_closed(p: XStateParams) -> XSpectrum:
    """Closed-form spectrum: u± = (1 - c3 ± d_u)/4, v± = (1 + c3 ± d_v)/4,

    with d_u = sqrt((r-s)^2 + (c1+c2)^2) and d_v = sqrt((r+s)^2 + (c1-c2)^2).
    """
    validate_physical(p)
    return XSpectrum(*_spectrum_values(p))


def entropy_closed(p: XStateParams) -> float:
    """Entropy of the X state from the closed-form spectrum, in bits."""
    validate_physical(p)
    return shannon_entropy(np.array(_spectrum_values(p)))


def to_density_matrix(p: XStateParams) -> np.ndarray:
    """Computational-basis density matrix of the X state."""
    validate_physical(p)
    r, s, c1, c2, c3 = p.as_tuple()
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = (1 + r + s + c3) / 4
    rho[1, 1] = (1 + r - s - c3) / 4
    rho[2, 2] = (1 - r + s - c3) / 4
    rho[3, 3] = (1 - r - s + c3) / 4
    rho[0, 3] = rho[3, 0] = (c1 - c2) / 4
    rho[1, 2] = rho[2, 1] = (c1 + c2) / 4
    return rho


def from_density_matrix(rho: np.ndarray, tol: float = 1e-9) -> XStateParams:
    """Extract (r, s, c1, c2, c3) from a density matrix with X-shaped support.

    Every entry off the diagonal/anti-diagonal must have modulus at most
    ``tol`` and the anti-diagonal must be real within ``tol``; otherwise
    NotAnXState is raised.
    """
    rho = validate_density_matrix(rho)
    for i, j in _X_PATTERN_ZERO:
        if abs(rho[i, j]) > tol:
            raise NotAnXState(f"entry ({i},{j}) = {rho[i, j]:.3e} is off the X pattern")
    for i, j in _X_ANTIDIAGONAL:
        if abs(rho[i, j].imag) > tol:
            raise NotAnXState(f"anti-diagonal entry ({i},{j}) has imaginary part {rho[i, j].imag:.3e}")
    r = float(np.trace(rho @ kron(SIGMA3, ID2)).real)
    s = float(np.trace(rho @ kron(ID2, SIGMA3)).real)
    c1 = float(np.trace(rho @ kron(SIGMA1, SIGMA1)).real)
    c2 = float(np.trace(rho @ kron(SIGMA2, SIGMA2)).real)
    c3 = float(np.trace(rho @ kron(SIGMA3, SIGMA3)).real)
    return XStateParams(r=r, s=s, c1=c1, c2=c2, c3=c3)
