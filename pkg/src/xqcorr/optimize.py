"""Deterministic derivative-free minimizers used by the deficit routines."""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_min(f: Callable[[float], float], lo: float, hi: float,
                       tol: float = 1e-10) -> tuple[float, float]:
    """Golden-section search on [lo, hi]; returns (x, f(x)).

    Assumes the bracket contains a minimum of a function that is unimodal on
    it, shrinking the interval to width ``tol``.
    """
    a, b = float(lo), float(hi)
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def pattern_search_min(f_batch: Callable[[np.ndarray], np.ndarray], x0: np.ndarray,
                       step0: np.ndarray, shrink: float = 0.6,
                       max_shrinks: int = 40) -> tuple[np.ndarray, float]:
    """Axial pattern search with a shrinking step; returns (x, f(x)).

    ``f_batch`` evaluates a whole (n, dim) batch of points at once.  At each
    iteration the 2*dim axial neighbors are tried; the best strict
    improvement is taken, otherwise the step shrinks by ``shrink``.  The
    search stops after ``max_shrinks`` shrinks.  Fully deterministic.
    """
    x = np.asarray(x0, dtype=float).copy()
    step = np.asarray(step0, dtype=float).copy()
    fx = float(f_batch(x[None, :])[0])
    dim = x.size
    shrinks = 0
    while shrinks < max_shrinks:
        candidates = np.repeat(x[None, :], 2 * dim, axis=0)
        for axis in range(dim):
            candidates[2 * axis, axis] += step[axis]
            candidates[2 * axis + 1, axis] -= step[axis]
        values = np.asarray(f_batch(candidates), dtype=float)
        j = int(np.argmin(values))
        if values[j] < fx:
            x = candidates[j]
            fx = float(values[j])
        else:
            step *= shrink
            shrinks += 1
    return x, fx
