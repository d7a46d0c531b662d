import numpy as np
import pytest

from xqcorr.entanglement import (concurrence_closed, concurrence_general,
                                 rho_rhotilde_spectrum_closed, spin_flip)
from xqcorr.errors import UnphysicalParams
from xqcorr.sampling import random_physical_params
from xqcorr.xstate import XStateParams, to_density_matrix

EXAMPLE = XStateParams(0.2, 0.3, 0.3, -0.4, 0.56)
ZEROS = XStateParams(0.0, 0.0, 0.0, 0.0, 0.0)
BELL = XStateParams(0.0, 0.0, 1.0, -1.0, 1.0)


def test_spin_flip_fixed_points():
    quarter = np.eye(4) / 4.0
    assert np.allclose(spin_flip(quarter), quarter, atol=1e-15)
    bell = to_density_matrix(BELL)
    assert np.allclose(spin_flip(bell), bell, atol=1e-15)


def test_spin_flip_swaps_computational_extremes():
    ket00 = np.zeros((4, 4), dtype=complex)
    ket00[0, 0] = 1.0
    ket11 = np.zeros((4, 4), dtype=complex)
    ket11[3, 3] = 1.0
    assert np.allclose(spin_flip(ket00), ket11, atol=1e-15)
    assert np.allclose(spin_flip(ket11), ket00, atol=1e-15)


def test_product_spectrum_zero_params():
    assert rho_rhotilde_spectrum_closed(ZEROS) == (1 / 16, 1 / 16, 1 / 16, 1 / 16)


def test_product_spectrum_bell():
    lams = rho_rhotilde_spectrum_closed(BELL)
    assert lams == (0.0, 1.0, 0.0, 0.0)


def test_product_spectrum_matches_matrix_path():
    rng = np.random.default_rng(7)
    for p in [EXAMPLE, *random_physical_params(rng, 300)]:
        rho = to_density_matrix(p)
        matrix_lams = np.sort(np.linalg.eigvals(rho @ spin_flip(rho)).real)
        closed = np.sort(rho_rhotilde_spectrum_closed(p))
        assert np.max(np.abs(closed - matrix_lams)) < 1e-10


def test_product_spectrum_nonnegative_exactly():
    rng = np.random.default_rng(8)
    for p in random_physical_params(rng, 200):
        assert all(lam >= 0.0 for lam in rho_rhotilde_spectrum_closed(p))


def test_radicand_factored_form_agrees():
    # (1 +- c3)^2 - (r +- s)^2 factors into products of diagonal weights
    rng = np.random.default_rng(9)
    for p in random_physical_params(rng, 300):
        direct_a = (1 + p.c3) ** 2 - (p.r + p.s) ** 2
        factored_a = (1 + p.r + p.s + p.c3) * (1 - p.r - p.s + p.c3)
        direct_b = (1 - p.c3) ** 2 - (p.r - p.s) ** 2
        factored_b = (1 + p.r - p.s - p.c3) * (1 - p.r + p.s - p.c3)
        assert abs(direct_a - factored_a) < 1e-12
        assert abs(direct_b - factored_b) < 1e-12


def test_concurrence_closed_trivials():
    assert concurrence_closed(BELL).value == 1.0
    assert concurrence_closed(ZEROS).value == 0.0


def test_concurrence_closed_rejects_unphysical():
    with pytest.raises(UnphysicalParams):
        concurrence_closed(XStateParams(0.0, 0.0, 0.9, 0.2, 0.1))


def test_breakdown_invariants():
    rng = np.random.default_rng(10)
    for p in random_physical_params(rng, 200):
        b = concurrence_closed(p)
        s = b.sqrt_lambdas
        assert s[0] >= s[1] >= s[2] >= s[3] >= 0.0
        assert abs(b.value - max(0.0, s[0] - s[1] - s[2] - s[3])) < 1e-12
        assert 0.0 <= b.value <= 1.0


def test_general_route_trivials():
    assert concurrence_general(to_density_matrix(BELL)).value == pytest.approx(1.0, abs=1e-12)
    assert concurrence_general(np.eye(4) / 4.0).value == 0.0


def test_closed_matches_general():
    rng = np.random.default_rng(11)
    for p in [EXAMPLE, *random_physical_params(rng, 300)]:
        closed = concurrence_closed(p).value
        general = concurrence_general(to_density_matrix(p)).value
        assert abs(closed - general) < 1e-10


def test_example_is_entangled():
    assert concurrence_closed(EXAMPLE).value > 0.1
