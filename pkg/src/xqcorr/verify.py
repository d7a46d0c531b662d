"""Cross-validation of every closed form against its matrix-path oracle.

Each check draws random inputs, evaluates the closed form and the
independent matrix computation, and reports the worst absolute deviation.
A report passes only if every deviation sits below its tolerance.  These
are the same comparisons the test suite pins down; the CLI exposes them so
a user can rerun the audit at any sample size.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .deficit import bell_diagonal_deficit, deficit_closed
from .dynamics import apply_channel_matrix, apply_channel_params, phase_flip_kraus
from .entanglement import concurrence_closed, concurrence_general, rho_rhotilde_spectrum_closed, spin_flip
from .linalg import dag, hermitian_eigenvalues, von_neumann_entropy
from .measurement import bloch_from_unitary, dephase, post_measurement_spectrum
from .sampling import (random_bell_diagonal_params, random_bloch, random_density_matrix,
                       random_physical_params, random_unitary_params)
from .xstate import spectrum_closed, to_density_matrix

DEFAULT_STATES = 200


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation < self.tolerance


@dataclass(frozen=True)
class VerifyReport:
    seed: int
    states: int
    checks: tuple[VerifyCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def _check_state_spectrum(rng, n: int) -> float:
    worst = 0.0
    for p in random_physical_params(rng, n):
        closed = np.sort(spectrum_closed(p).as_array())[::-1]
        matrix = hermitian_eigenvalues(to_density_matrix(p))
        worst = max(worst, float(np.max(np.abs(closed - matrix))))
    return worst


def _check_post_measurement(rng, n: int) -> float:
    worst = 0.0
    for p in random_physical_params(rng, n):
        z = bloch_from_unitary(random_unitary_params(rng))
        theta = (p.c1 * z.z1) ** 2 + (p.c2 * z.z2) ** 2 + (p.c3 * z.z3) ** 2
        closed = np.sort(post_measurement_spectrum(p, z.z3, theta))[::-1]
        matrix = hermitian_eigenvalues(dephase(to_density_matrix(p), z))
        worst = max(worst, float(np.max(np.abs(closed - matrix))))
    return worst


def _check_flip_product_spectrum(rng, n: int) -> float:
    worst = 0.0
    for p in random_physical_params(rng, n):
        rho = to_density_matrix(p)
        closed = np.sort(rho_rhotilde_spectrum_closed(p))[::-1]
        matrix = np.sort(np.linalg.eigvals(rho @ spin_flip(rho)).real)[::-1]
        worst = max(worst, float(np.max(np.abs(closed - matrix))))
    return worst


def _check_concurrence(rng, n: int) -> float:
    worst = 0.0
    for p in random_physical_params(rng, n):
        closed = concurrence_closed(p).value
        general = concurrence_general(to_density_matrix(p)).value
        worst = max(worst, abs(closed - general))
    return worst


def _check_bell_diagonal(rng, n: int) -> float:
    worst = 0.0
    for p in random_bell_diagonal_params(rng, n):
        direct = bell_diagonal_deficit(p.c1, p.c2, p.c3)
        worst = max(worst, abs(deficit_closed(p).value - direct))
    return worst


def _check_channel_map(rng, n: int) -> float:
    worst = 0.0
    for p in random_physical_params(rng, n):
        strength = float(rng.uniform(0.0, 1.0))
        lhs = to_density_matrix(apply_channel_params(p, strength))
        rhs = apply_channel_matrix(to_density_matrix(p), strength)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def _check_kraus_completeness(rng, n: int) -> float:
    worst = 0.0
    for strength in rng.uniform(0.0, 1.0, size=n):
        total = sum(dag(k) @ k for k in phase_flip_kraus(float(strength)))
        worst = max(worst, float(np.max(np.abs(total - np.eye(4)))))
    return worst


def _check_dephasing_monotone(rng, n: int) -> float:
    """Worst entropy decrease under dephasing (positive = violation)."""
    worst = -np.inf
    for _ in range(n):
        rho = random_density_matrix(rng)
        z = random_bloch(rng)
        worst = max(worst, von_neumann_entropy(rho) - von_neumann_entropy(dephase(rho, z)))
    return float(worst)


_CHECKS = (
    ("state-spectrum", _check_state_spectrum, 1e-10),
    ("post-measurement-spectrum", _check_post_measurement, 1e-10),
    ("flip-product-spectrum", _check_flip_product_spectrum, 1e-10),
    ("concurrence", _check_concurrence, 1e-10),
    ("bell-diagonal-deficit", _check_bell_diagonal, 1e-8),
    ("channel-parameter-map", _check_channel_map, 1e-12),
    ("kraus-completeness", _check_kraus_completeness, 1e-12),
    ("dephasing-entropy-monotone", _check_dephasing_monotone, 1e-10),
)


def run_verification(seed: int = 0, states: int = DEFAULT_STATES) -> VerifyReport:
    """Run every cross-check over ``states`` random draws each."""
    checks = []
    for i, (name, fn, tol) in enumerate(_CHECKS):
        rng = np.random.default_rng([seed, i])
        checks.append(VerifyCheck(name=name, max_deviation=fn(rng, states), tolerance=tol))
    return VerifyReport(seed=seed, states=states, checks=tuple(checks))
