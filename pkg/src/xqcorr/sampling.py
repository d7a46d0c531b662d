"""Seeded random generators for states, parameters, and measurements.

Everything takes an explicit numpy Generator so that every consumer
(verification runs, tests, the CLI verify command) is reproducible from a
single integer seed.
"""
from __future__ import annotations

import numpy as np

from .linalg import dag
from .measurement import BlochMeasurement, UnitaryParams
from .xstate import XStateParams

PHYSICALITY_SLACK = 1e-10


def random_physical_params(rng: np.random.Generator, n: int) -> list[XStateParams]:
    """n X-state parameter sets drawn uniformly from the physical region.

    Rejection sampling from the cube [-1, 1]^5 against the closed-form
    positivity conditions.
    """
    out: list[XStateParams] = []
    while len(out) < n:
        v = rng.uniform(-1.0, 1.0, size=(8 * (n - len(out)) + 64, 5))
        r, s, c1, c2, c3 = v.T
        ok = (np.hypot(r - s, c1 + c2) <= 1.0 - c3 + PHYSICALITY_SLACK) \
            & (np.hypot(r + s, c1 - c2) <= 1.0 + c3 + PHYSICALITY_SLACK)
        for row in v[ok]:
            out.append(XStateParams(*map(float, row)))
            if len(out) == n:
                break
    return out


def random_bell_diagonal_params(rng: np.random.Generator, n: int) -> list[XStateParams]:
    """n physical parameter sets with r = s = 0."""
    out: list[XStateParams] = []
    while len(out) < n:
        v = rng.uniform(-1.0, 1.0, size=(4 * (n - len(out)) + 64, 3))
        c1, c2, c3 = v.T
        ok = (np.abs(c1 + c2) <= 1.0 - c3 + PHYSICALITY_SLACK) \
            & (np.abs(c1 - c2) <= 1.0 + c3 + PHYSICALITY_SLACK)
        for row in v[ok]:
            out.append(XStateParams(0.0, 0.0, *map(float, row)))
            if len(out) == n:
                break
    return out


def random_density_matrix(rng: np.random.Generator) -> np.ndarray:
    """A 4x4 density matrix from the Ginibre ensemble (full rank a.s.)."""
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    m = g @ dag(g)
    m = 0.5 * (m + dag(m))
    return m / np.trace(m).real


def random_bloch(rng: np.random.Generator) -> BlochMeasurement:
    """A measurement direction uniform on the unit sphere."""
    while True:
        v = rng.normal(size=3)
        norm = float(np.linalg.norm(v))
        if norm > 1e-6:
            return BlochMeasurement(z1=float(v[0]) / norm, z2=float(v[1]) / norm,
                                    z3=float(v[2]) / norm)


def random_unitary_params(rng: np.random.Generator) -> UnitaryParams:
    """Unitary coordinates (t, y) uniform on the unit 3-sphere."""
    while True:
        v = rng.normal(size=4)
        norm = float(np.linalg.norm(v))
        if norm > 1e-6:
            return UnitaryParams(t=float(v[0]) / norm, y1=float(v[1]) / norm,
                                 y2=float(v[2]) / norm, y3=float(v[3]) / norm)
