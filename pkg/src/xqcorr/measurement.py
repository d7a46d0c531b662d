"""Projective measurements on qubit b.

A von Neumann measurement on one qubit is a pair of rank-1 projectors
B0 = (I + z.sigma)/2, B1 = (I - z.sigma)/2 for a unit Bloch vector z.
Any single-qubit unitary V = t*I + i*(y.sigma) with t^2 + |y|^2 = 1 induces
such a measurement through z = image of the north pole under V, and the
dephased state depends on V only through z, so z is the canonical
coordinate here; the (t, y) parametrization is kept to validate that
reduction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NegativeDiscriminant, NotNormalized
from .linalg import ID2, SIGMA1, SIGMA2, SIGMA3, kron, validate_density_matrix
from .xstate import XStateParams

NORMALIZATION_TOL = 1e-12
RADICAND_FLOOR = -1e-12


@dataclass(frozen=True)
class UnitaryParams:
    """Real quaternion-like coordinates (t, y1, y2, y3) of a 2x2 unitary."""

    t: float
    y1: float
    y2: float
    y3: float

    def norm_sq(self) -> float:
        return self.t ** 2 + self.y1 ** 2 + self.y2 ** 2 + self.y3 ** 2


@dataclass(frozen=True)
class BlochMeasurement:
    """Unit Bloch vector selecting the measurement basis on one qubit."""

    z1: float
    z2: float
    z3: float

    def as_array(self) -> np.ndarray:
        return np.array([self.z1, self.z2, self.z3])

    def norm_sq(self) -> float:
        return self.z1 ** 2 + self.z2 ** 2 + self.z3 ** 2


def _check_unitary(u: UnitaryParams) -> None:
    if abs(u.norm_sq() - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"(t, y) has squared norm {u.norm_sq()!r}, expected 1")


def _check_bloch(z: BlochMeasurement) -> None:
    if abs(z.norm_sq() - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"z has squared norm {z.norm_sq()!r}, expected 1")


def unitary_matrix(u: UnitaryParams) -> np.ndarray:
    """The 2x2 unitary V = t*I + i*(y1*s1 + y2*s2 + y3*s3)."""
    _check_unitary(u)
    return u.t * ID2 + 1j * (u.y1 * SIGMA1 + u.y2 * SIGMA2 + u.y3 * SIGMA3)


def bloch_from_unitary(u: UnitaryParams) -> BlochMeasurement:
    """Bloch vector of V|0><0|V^dag, i.e. the coefficients of V s3 V^dag.

    z1 = 2(-t*y2 + y1*y3), z2 = 2(t*y1 + y2*y3), z3 = t^2 + y3^2 - y1^2 - y2^2.
    """
    _check_unitary(u)
    t, y1, y2, y3 = u.t, u.y1, u.y2, u.y3
    return BlochMeasurement(
        z1=2.0 * (-t * y2 + y1 * y3),
        z2=2.0 * (t * y1 + y2 * y3),
        z3=t * t + y3 * y3 - y1 * y1 - y2 * y2,
    )


def unitary_from_bloch(z: BlochMeasurement) -> UnitaryParams:
    """A (t, y) preimage of z under ``bloch_from_unitary``.

    Constructed as the rotation about the axis e3 x z taking e3 to z.
    """
    _check_bloch(z)
    rho = math.hypot(z.z1, z.z2)
    if rho < 1e-15:
        # poles: identity for +e3, a pi rotation about e1 for -e3
        return UnitaryParams(1.0, 0.0, 0.0, 0.0) if z.z3 > 0 else UnitaryParams(0.0, 1.0, 0.0, 0.0)
    alpha = math.acos(max(-1.0, min(1.0, z.z3)))
    half = 0.5 * alpha
    return UnitaryParams(
        t=math.cos(half),
        y1=math.sin(half) * z.z2 / rho,
        y2=-math.sin(half) * z.z1 / rho,
        y3=0.0,
    )


def measurement_from_bloch(z: BlochMeasurement) -> tuple[np.ndarray, np.ndarray]:
    """Projector pair (B0, B1) = ((I + z.sigma)/2, (I - z.sigma)/2)."""
    _check_bloch(z)
    zs = 0.5 * (z.z1 * SIGMA1 + z.z2 * SIGMA2 + z.z3 * SIGMA3)
    return 0.5 * ID2 + zs, 0.5 * ID2 - zs


def dephase(rho: np.ndarray, z: BlochMeasurement) -> np.ndarray:
    """Remove coherences on qubit b: sum_k (I x B_k) rho (I x B_k)."""
    rho = validate_density_matrix(rho)
    b0, b1 = measurement_from_bloch(z)
    k0 = kron(ID2, b0)
    k1 = kron(ID2, b1)
    return k0 @ rho @ k0 + k1 @ rho @ k1


def post_measurement_spectrum(p: XStateParams, phi: float, theta: float) -> np.ndarray:
    """Closed-form eigenvalues of the dephased X state, in display order.

    lambda_{1,2} = (1 - s*phi ± sqrt(r^2 - 2*r*c3*phi + theta))/4 and
    lambda_{3,4} = (1 + s*phi ± sqrt(r^2 + 2*r*c3*phi + theta))/4, where
    phi = z3 and theta = c1^2 z1^2 + c2^2 z2^2 + c3^2 z3^2 for a measurement
    along z.  phi and theta are taken as independent arguments; callers are
    responsible for their coupling through z.
    """
    r, s, c3 = p.r, p.s, p.c3
    rad_minus = r * r - 2.0 * r * c3 * phi + theta
    rad_plus = r * r + 2.0 * r * c3 * phi + theta
    if rad_minus < RADICAND_FLOOR or rad_plus < RADICAND_FLOOR:
        raise NegativeDiscriminant(
            f"radicands ({rad_minus:.3e}, {rad_plus:.3e}) below {RADICAND_FLOOR:.1e}"
        )
    root_minus = math.sqrt(max(rad_minus, 0.0))
    root_plus = math.sqrt(max(rad_plus, 0.0))
    return np.array([
        (1.0 - s * phi + root_minus) / 4.0,
        (1.0 - s * phi - root_minus) / 4.0,
        (1.0 + s * phi + root_plus) / 4.0,
        (1.0 + s * phi - root_plus) / 4.0,
    ])
