"""Dense complex linear algebra for 2x2 and 4x4 operators.

Everything works on plain numpy arrays. Density matrices are validated
explicitly wherever a contract requires it; all entropies are in bits.
"""
from __future__ import annotations

import numpy as np

from .errors import InvalidState, NonHermitianInput

ID2 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA1, SIGMA2, SIGMA3)

HERMITICITY_TOL = 1e-10
DENSITY_HERMITICITY_TOL = 1e-12
DENSITY_TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10


def dag(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, row-major blocks matching basis order |00>,|01>,|10>,|11>."""
    return np.kron(a, b)


def is_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def hermitian_eigenvalues(m: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending.

    Raises NonHermitianInput when the Hermiticity deviation exceeds ``tol``.
    """
    m = np.asarray(m, dtype=complex)
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > tol:
        raise NonHermitianInput(f"hermiticity deviation {dev:.3e} exceeds {tol:.1e}")
    return np.sort(np.linalg.eigvalsh(m))[::-1]


def validate_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Check the two-qubit density-matrix invariants and return the array.

    Hermitian within 1e-12, unit trace within 1e-12, and smallest eigenvalue
    above -1e-10 (tiny negative jitter is tolerated, genuine negativity is not).
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidState(f"expected a 4x4 matrix, got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise InvalidState("matrix has non-finite entries")
    dev = float(np.max(np.abs(rho - rho.conj().T)))
    if dev > DENSITY_HERMITICITY_TOL:
        raise InvalidState(f"not Hermitian: deviation {dev:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > DENSITY_TRACE_TOL:
        raise InvalidState(f"trace {tr} is not 1")
    lo = float(np.linalg.eigvalsh(rho)[0])
    if lo < EIGENVALUE_FLOOR:
        raise InvalidState(f"negative eigenvalue {lo:.3e}")
    return rho


def shannon_entropy(probs: np.ndarray) -> float:
    """Base-2 entropy of a probability vector, with 0*log(0) = 0.

    Values are clamped to [0, 1] first, absorbing floating-point jitter at
    the boundary of the simplex.
    """
    v = np.clip(np.asarray(probs, dtype=float), 0.0, 1.0)
    v = v[v > 0.0]
    if v.size == 0:
        return 0.0
    return float(-(v * np.log2(v)).sum())


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy of a density matrix, in bits."""
    rho = validate_density_matrix(rho)
    return shannon_entropy(np.linalg.eigvalsh(rho))
