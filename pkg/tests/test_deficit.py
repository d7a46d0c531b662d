import math

import numpy as np
import pytest

from xqcorr.deficit import (DeficitMethod, bell_diagonal_deficit, deficit_closed, deficit_oracle,
                            post_measurement_entropy, theta_monotonicity_check)
from xqcorr.errors import OutOfRange, UnphysicalParams
from xqcorr.sampling import random_bell_diagonal_params, random_physical_params
from xqcorr.xstate import XStateParams

EXAMPLE = XStateParams(0.2, 0.3, 0.3, -0.4, 0.56)
ZEROS = XStateParams(0.0, 0.0, 0.0, 0.0, 0.0)
BELL = XStateParams(0.0, 0.0, 1.0, -1.0, 1.0)


def test_worked_example_value():
    assert abs(deficit_closed(EXAMPLE).value - 0.130614) <= 5e-5


def test_worked_example_minimizer_at_boundary():
    res = deficit_closed(EXAMPLE)
    assert abs(res.argmin_phi) == 1.0
    assert res.method is DeficitMethod.CLOSED_FORM


def test_product_of_maximally_mixed_qubits():
    res = deficit_closed(ZEROS)
    assert abs(res.value) < 1e-12
    assert res.method is DeficitMethod.BELL_DIAGONAL


def test_bell_state_deficit_is_one():
    assert abs(deficit_closed(BELL).value - 1.0) < 1e-9
    assert abs(bell_diagonal_deficit(1.0, -1.0, 1.0) - 1.0) < 1e-12


def test_result_invariants():
    rng = np.random.default_rng(41)
    for p in random_physical_params(rng, 100):
        res = deficit_closed(p)
        assert res.value == res.min_entropy - res.state_entropy
        assert -1.0 <= res.argmin_phi <= 1.0
        assert res.min_entropy > 0.0


def test_closed_form_can_undershoot_zero():
    # The pinned-theta minimization is a relaxation: for some physical
    # states it dips below the state entropy and the value goes negative.
    # The sphere search never does, and always sits at or above it.
    rng = np.random.default_rng(41)
    negative = [p for p in random_physical_params(rng, 100)
                if deficit_closed(p).value < -1e-9]
    assert len(negative) == 8
    for p in negative:
        closed = deficit_closed(p).value
        oracle = deficit_oracle(p, coarse_grid=64).value
        assert oracle >= -1e-9
        assert oracle >= closed - 1e-6


def test_bell_diagonal_formula_trivial():
    assert bell_diagonal_deficit(0.0, 0.0, 0.0) == 0.0


def test_bell_diagonal_formula_matches_minimization():
    rng = np.random.default_rng(42)
    for p in random_bell_diagonal_params(rng, 300):
        direct = bell_diagonal_deficit(p.c1, p.c2, p.c3)
        assert abs(deficit_closed(p).value - direct) < 1e-8


def test_bell_diagonal_rejects_unphysical():
    with pytest.raises(UnphysicalParams):
        bell_diagonal_deficit(1.0, 1.0, 1.0)


def test_entropy_flat_in_phi_for_bell_diagonal():
    # r = s = 0 removes every phi dependence from the spectrum
    p = XStateParams(0.0, 0.0, 0.5, 0.2, 0.1)
    for theta in (0.04, 0.09, 0.25):
        assert post_measurement_entropy(p, 0.3, theta) == post_measurement_entropy(p, -0.7, theta)


def test_post_measurement_entropy_bell_diagonal_closed_form():
    rng = np.random.default_rng(43)
    for p in random_bell_diagonal_params(rng, 100):
        big_c = max(abs(p.c1), abs(p.c2), abs(p.c3))
        assert 0.0 < big_c < 1.0  # boundary draws have probability zero
        expected = 2.0 - 0.5 * ((1.0 + big_c) * math.log2(1.0 + big_c)
                                + (1.0 - big_c) * math.log2(1.0 - big_c))
        assert abs(post_measurement_entropy(p, 0.0, big_c ** 2) - expected) < 1e-12


def test_maximally_mixed_post_measurement_entropy():
    assert post_measurement_entropy(ZEROS, 0.5, 0.0) == 2.0


def test_theta_monotonicity_examples():
    bd = XStateParams(0.0, 0.0, 0.5, 0.2, 0.1)
    assert theta_monotonicity_check(bd, 0.0, 0.1, 0.2)
    assert theta_monotonicity_check(EXAMPLE, 0.5, 0.09, 0.3136)
    assert theta_monotonicity_check(EXAMPLE, 0.5, 0.25, 0.25)  # degenerate equality


def test_closed_rejects_unphysical():
    with pytest.raises(UnphysicalParams):
        deficit_closed(XStateParams(0.0, 0.0, 1.0, 1.0, 1.0))
    with pytest.raises(UnphysicalParams):
        deficit_oracle(XStateParams(0.0, 0.0, 1.0, 1.0, 1.0))


def test_oracle_grid_floor():
    with pytest.raises(OutOfRange):
        deficit_oracle(EXAMPLE, coarse_grid=32)


def test_oracle_trivial_state():
    assert abs(deficit_oracle(ZEROS, coarse_grid=64).value) < 1e-9


def test_oracle_matches_bell_diagonal_closed_form():
    p = XStateParams(0.0, 0.0, 0.5, 0.2, 0.1)
    res = deficit_oracle(p, coarse_grid=256)
    assert res.method is DeficitMethod.SPHERE_ORACLE
    assert abs(res.value - bell_diagonal_deficit(0.5, 0.2, 0.1)) < 1e-6


def test_oracle_against_relaxation_on_example():
    closed = deficit_closed(EXAMPLE).value
    oracle = deficit_oracle(EXAMPLE, coarse_grid=64)
    assert oracle.value >= closed - 1e-6
    assert abs(oracle.argmin_z.norm_sq() - 1.0) < 1e-12
    assert oracle.argmin_z.z3 >= 0.0  # canonical hemisphere
    assert oracle.value == oracle.min_entropy - oracle.state_entropy


def test_optimizers_are_deterministic():
    a = deficit_closed(EXAMPLE)
    b = deficit_closed(EXAMPLE)
    assert (a.value, a.argmin_phi, a.min_entropy) == (b.value, b.argmin_phi, b.min_entropy)
    oa = deficit_oracle(EXAMPLE, coarse_grid=64)
    ob = deficit_oracle(EXAMPLE, coarse_grid=64)
    assert (oa.value, oa.argmin_z) == (ob.value, ob.argmin_z)
