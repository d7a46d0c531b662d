"""Phase-flip decoherence on both qubits.

The channel acts with strength p = 1 - exp(-gamma*t) on each side.  Its
action on an X state has two equivalent realizations: a parameter map
(c1, c2 scaled by (1-p)^2, everything else fixed) and the explicit
four-operator Kraus sum.  Both are exposed; their agreement is a
cross-check, not an assumption.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .deficit import _minimize_over_phi, deficit_closed, deficit_oracle
from .entanglement import concurrence_closed, rho_rhotilde_spectrum_closed
from .errors import OrderingViolated, OutOfRange
from .linalg import ID2, SIGMA3, dag, kron
from .xstate import XStateParams, entropy_closed, validate_physical

SUDDEN_DEATH_SCAN = 4096
SUDDEN_DEATH_TOL = 1e-6


@dataclass(frozen=True)
class PhaseFlipChannel:
    """Dephasing strength p in [0, 1]; gamma is metadata for time conversion."""

    p: float
    gamma: float | None = None

    def __post_init__(self):
        _check_strength(self.p)
        if self.gamma is not None and not self.gamma > 0.0:
            raise OutOfRange(f"gamma must be positive, got {self.gamma!r}")

    @classmethod
    def from_time(cls, gamma: float, t: float) -> "PhaseFlipChannel":
        if not gamma > 0.0:
            raise OutOfRange(f"gamma must be positive, got {gamma!r}")
        if t < 0.0:
            raise OutOfRange(f"time must be nonnegative, got {t!r}")
        return cls(p=1.0 - math.exp(-gamma * t), gamma=gamma)


@dataclass(frozen=True)
class SweepRecord:
    """One decoherence grid point: strength, deficit (bits), concurrence."""

    p: float
    deficit: float
    concurrence: float
    oracle_deficit: float | None = None


def _check_strength(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"channel strength must lie in [0, 1], got {p!r}")


def phase_flip_kraus(p: float) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """The four two-sided Kraus operators; sum of K^dag K is the identity."""
    _check_strength(p)
    keep = math.sqrt(1.0 - p / 2.0)
    flip = math.sqrt(p / 2.0)
    g0 = keep * ID2
    g1 = flip * SIGMA3
    return kron(g0, g0), kron(g0, g1), kron(g1, g0), kron(g1, g1)


def apply_channel_matrix(rho: np.ndarray, p: float) -> np.ndarray:
    """Kraus-sum action of the channel on a density matrix."""
    return sum(k @ rho @ dag(k) for k in phase_flip_kraus(p))


def apply_channel_params(x: XStateParams, p: float) -> XStateParams:
    """Parameter-map action: (r, s, c1, c2, c3) -> (r, s, (1-p)^2 c1, (1-p)^2 c2, c3)."""
    validate_physical(x)
    _check_strength(p)
    fade = (1.0 - p) ** 2
    return XStateParams(x.r, x.s, fade * x.c1, fade * x.c2, x.c3)


def sweep(x: XStateParams, p_steps: int = 101, with_oracle: bool = False,
          oracle_grid: int = 256) -> list[SweepRecord]:
    """Deficit and concurrence on the uniform strength grid {0, ..., 1}.

    The deficit route recomputes max(|c1|, |c2|, |c3|) at every p, so the
    sweep stays valid for inputs where the fading transverse correlations
    start out dominant.
    """
    validate_physical(x)
    if p_steps < 2:
        raise OutOfRange(f"p_steps must be at least 2, got {p_steps}")
    records = []
    for p in np.linspace(0.0, 1.0, p_steps):
        evolved = apply_channel_params(x, float(p))
        oracle = deficit_oracle(evolved, coarse_grid=oracle_grid).value if with_oracle else None
        records.append(SweepRecord(
            p=float(p),
            deficit=deficit_closed(evolved).value,
            concurrence=concurrence_closed(evolved).value,
            oracle_deficit=oracle,
        ))
    return records


def _preclamp_wootters(x: XStateParams) -> float:
    roots = [math.sqrt(lam) for lam in rho_rhotilde_spectrum_closed(x)]
    return 2.0 * max(roots) - sum(roots)


def find_sudden_death(x: XStateParams, tol: float = SUDDEN_DEATH_TOL) -> float | None:
    """Smallest channel strength at which the concurrence hits zero for good.

    Root-finds the unclamped quantity 2*max(sqrt(lam)) - sum(sqrt(lam)),
    which crosses zero transversally where the clamped concurrence merely
    flattens.  Returns None when the state starts separable or stays
    entangled through p = 1.
    """
    validate_physical(x)
    if not tol > 0.0:
        raise OutOfRange(f"tol must be positive, got {tol!r}")

    def w(p: float) -> float:
        return _preclamp_wootters(apply_channel_params(x, p))

    if w(0.0) <= 0.0 or w(1.0) > 0.0:
        return None
    lo = 0.0
    hi = 1.0
    for i in range(1, SUDDEN_DEATH_SCAN + 1):
        p = i / SUDDEN_DEATH_SCAN
        if w(p) <= 0.0:
            lo, hi = (i - 1) / SUDDEN_DEATH_SCAN, p
            break
    while (hi - lo) / 2.0 > tol:
        mid = 0.5 * (lo + hi)
        if w(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def deficit_under_channel_closed(x: XStateParams, p: float) -> float:
    """Deficit of the evolved state with the minimization pinned at theta = c3^2.

    Valid only under the strict ordering |c1| < |c2| < |c3|, which the
    channel preserves, so max(|c1(p)|, |c2(p)|, |c3|) = |c3| for every p and
    the measurement term never moves; only the state entropy decays.
    """
    if not abs(x.c1) < abs(x.c2) < abs(x.c3):
        raise OrderingViolated(
            f"requires |c1| < |c2| < |c3|, got ({abs(x.c1)!r}, {abs(x.c2)!r}, {abs(x.c3)!r})"
        )
    validate_physical(x)
    _check_strength(p)
    _, min_entropy = _minimize_over_phi(x, x.c3 * x.c3)
    return min_entropy - entropy_closed(apply_channel_params(x, p))
