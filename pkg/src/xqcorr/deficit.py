"""One-way information deficit of X states.

The deficit is the minimal entropy increase caused by a projective
measurement on qubit b,

    min over measurements of S(dephased state) - S(state),

in bits.  Two routes are provided and deliberately kept side by side:

* ``deficit_closed`` minimizes the closed-form post-measurement entropy
  f(phi, theta) over the single variable phi with theta pinned at C^2,
  C = max(|c1|, |c2|, |c3|).  Pinning theta relies on f being nonincreasing
  in theta; since theta <= C^2 for every realizable measurement, this is a
  relaxation and the result is a lower bound on the sphere minimum.
* ``deficit_oracle`` minimizes the matrix-path entropy S(dephase(rho, z))
  over the measurement sphere directly, with no closed forms involved.

When the two disagree beyond tolerance, both values stand; the library
never substitutes one for the other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import OutOfRange, UnphysicalParams
from .linalg import ID2, PAULIS, shannon_entropy, von_neumann_entropy
from .measurement import BlochMeasurement, post_measurement_spectrum
from .optimize import golden_section_min, pattern_search_min
from .xstate import XStateParams, entropy_closed, to_density_matrix, validate_physical

PHI_GRID_POINTS = 2001
PHI_REFINE_TOL = 1e-10
_CHUNK = 32768


class DeficitMethod(str, Enum):
    CLOSED_FORM = "closed-form"
    BELL_DIAGONAL = "bell-diagonal"
    SPHERE_ORACLE = "sphere-oracle"


@dataclass(frozen=True)
class DeficitResult:
    """Deficit value (bits) plus the minimizer and entropies behind it."""

    value: float
    min_entropy: float
    state_entropy: float
    method: DeficitMethod
    argmin_phi: float | None = None
    argmin_z: BlochMeasurement | None = None


def post_measurement_entropy(p: XStateParams, phi: float, theta: float) -> float:
    """f(phi, theta): entropy of the dephased state from the closed form, bits."""
    return shannon_entropy(post_measurement_spectrum(p, phi, theta))


def theta_monotonicity_check(p: XStateParams, phi: float, theta1: float,
                             theta2: float) -> bool:
    """True iff f(phi, theta1) >= f(phi, theta2) - 1e-12 (f nonincreasing in theta)."""
    f1 = post_measurement_entropy(p, phi, theta1)
    f2 = post_measurement_entropy(p, phi, theta2)
    return f1 >= f2 - 1e-12


def _entropy_rows(lams: np.ndarray) -> np.ndarray:
    """Base-2 entropy of each row of a stack of probability vectors."""
    v = np.clip(lams, 0.0, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(v > 0.0, v * np.log2(v), 0.0)
    return -terms.sum(axis=-1)


def _phi_grid_entropies(p: XStateParams, phis: np.ndarray, theta: float) -> np.ndarray:
    r, s, c3 = p.r, p.s, p.c3
    rad_minus = np.clip(r * r - 2.0 * r * c3 * phis + theta, 0.0, None)
    rad_plus = np.clip(r * r + 2.0 * r * c3 * phis + theta, 0.0, None)
    root_minus = np.sqrt(rad_minus)
    root_plus = np.sqrt(rad_plus)
    lam = np.stack([
        1.0 - s * phis + root_minus,
        1.0 - s * phis - root_minus,
        1.0 + s * phis + root_plus,
        1.0 + s * phis - root_plus,
    ], axis=-1) / 4.0
    return _entropy_rows(lam)


def _minimize_over_phi(p: XStateParams, theta: float) -> tuple[float, float]:
    """Global minimum of f(., theta) on [-1, 1]: dense grid, then golden section."""
    phis = np.linspace(-1.0, 1.0, PHI_GRID_POINTS)
    values = _phi_grid_entropies(p, phis, theta)
    i = int(np.argmin(values))
    lo = phis[max(i - 1, 0)]
    hi = phis[min(i + 1, PHI_GRID_POINTS - 1)]
    x, fx = golden_section_min(lambda phi: post_measurement_entropy(p, phi, theta),
                               lo, hi, tol=PHI_REFINE_TOL)
    if fx <= values[i]:
        return x, fx
    return float(phis[i]), float(values[i])


def deficit_closed(p: XStateParams) -> DeficitResult:
    """One-way deficit via the single-variable closed-form minimization.

    Minimizes f(phi, C^2) over phi in [-1, 1] and subtracts the closed-form
    state entropy.  Tagged ``bell-diagonal`` when r = s = 0 (f is then
    independent of phi), otherwise ``closed-form``.

    Because theta is pinned at C^2 even where no measurement realizes that
    pair (phi, C^2), the result lower-bounds the realizable deficit and can
    be negative.  ``deficit_oracle`` searches realized measurements only and
    is nonnegative up to float noise.
    """
    validate_physical(p)
    big_c = max(abs(p.c1), abs(p.c2), abs(p.c3))
    phi, min_entropy = _minimize_over_phi(p, big_c * big_c)
    state_entropy = entropy_closed(p)
    method = DeficitMethod.BELL_DIAGONAL if (p.r == 0.0 and p.s == 0.0) else DeficitMethod.CLOSED_FORM
    return DeficitResult(value=min_entropy - state_entropy, min_entropy=min_entropy,
                         state_entropy=state_entropy, method=method, argmin_phi=phi)


def _xlog2x(x: float) -> float:
    return x * math.log2(x) if x > 0.0 else 0.0


def bell_diagonal_deficit(c1: float, c2: float, c3: float) -> float:
    """Closed-form deficit of the r = s = 0 (Bell-diagonal) family, in bits."""
    validate_physical(XStateParams(0.0, 0.0, c1, c2, c3))
    big_c = max(abs(c1), abs(c2), abs(c3))
    corner_sum = (
        _xlog2x(1.0 - c1 - c2 - c3)
        + _xlog2x(1.0 - c1 + c2 + c3)
        + _xlog2x(1.0 + c1 - c2 + c3)
        + _xlog2x(1.0 + c1 + c2 - c3)
    )
    return corner_sum / 4.0 - (_xlog2x(1.0 - big_c) + _xlog2x(1.0 + big_c)) / 2.0


def _angles_to_z(angles: np.ndarray) -> np.ndarray:
    """(n, 2) latitude/longitude pairs -> (n, 3) unit vectors."""
    alpha = angles[:, 0]
    beta = angles[:, 1]
    sin_a = np.sin(alpha)
    return np.stack([sin_a * np.cos(beta), sin_a * np.sin(beta), np.cos(alpha)], axis=-1)


def _dephased_entropies(rho: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Matrix-path S(sum_k (I x B_k) rho (I x B_k)) for a batch of z, in bits."""
    b0 = 0.5 * (ID2[None, :, :] + np.einsum("nk,kij->nij", zs, np.stack(PAULIS)))
    k0 = np.einsum("ab,ncd->nacbd", ID2, b0).reshape(-1, 4, 4)
    k1 = np.einsum("ab,ncd->nacbd", ID2, ID2[None, :, :] - b0).reshape(-1, 4, 4)
    dephased = k0 @ rho @ k0 + k1 @ rho @ k1
    return _entropy_rows(np.linalg.eigvalsh(dephased))


def deficit_oracle(p: XStateParams, coarse_grid: int = 256,
                   refine_iters: int = 40) -> DeficitResult:
    """One-way deficit by exhaustive search over the measurement sphere.

    Evaluates the matrix-path dephased entropy on a coarse_grid x
    2*coarse_grid latitude/longitude grid covering a hemisphere (antipodal
    z dephase identically), then refines around the best cell by pattern
    search with a shrinking step.  Independent of every closed form; used
    to audit ``deficit_closed``.
    """
    validate_physical(p)
    if coarse_grid < 64:
        raise OutOfRange(f"coarse_grid must be at least 64, got {coarse_grid}")
    rho = to_density_matrix(p)
    state_entropy = von_neumann_entropy(rho)

    alphas = np.linspace(0.0, math.pi / 2.0, coarse_grid)
    betas = np.linspace(0.0, 2.0 * math.pi, 2 * coarse_grid, endpoint=False)
    grid = np.stack(np.meshgrid(alphas, betas, indexing="ij"), axis=-1).reshape(-1, 2)

    best_value = math.inf
    best_angles = grid[0]
    for start in range(0, grid.shape[0], _CHUNK):
        chunk = grid[start:start + _CHUNK]
        values = _dephased_entropies(rho, _angles_to_z(chunk))
        j = int(np.argmin(values))
        if values[j] < best_value:
            best_value = float(values[j])
            best_angles = chunk[j]

    step0 = np.array([math.pi / 2.0 / (coarse_grid - 1), math.pi / coarse_grid])
    angles, min_entropy = pattern_search_min(
        lambda ab: _dephased_entropies(rho, _angles_to_z(ab)),
        best_angles, step0, shrink=0.6, max_shrinks=refine_iters)

    z = _angles_to_z(angles[None, :])[0]
    if z[2] < 0.0:
        z = -z
    z = z / np.linalg.norm(z)
    return DeficitResult(value=min_entropy - state_entropy, min_entropy=min_entropy,
                         state_entropy=state_entropy, method=DeficitMethod.SPHERE_ORACLE,
                         argmin_z=BlochMeasurement(z1=float(z[0]), z2=float(z[1]), z3=float(z[2])))
