import numpy as np
import pytest

from xqcorr.errors import InvalidState, NonHermitianInput
from xqcorr.linalg import (ID2, PAULIS, SIGMA1, SIGMA3, dag, hermitian_eigenvalues, kron,
                           shannon_entropy, validate_density_matrix, von_neumann_entropy)


def test_kron_identity():
    assert np.array_equal(kron(ID2, ID2), np.eye(4))


def test_kron_basis_order():
    assert np.array_equal(kron(SIGMA3, ID2), np.diag([1.0, 1.0, -1.0, -1.0]))
    assert np.array_equal(kron(SIGMA1, SIGMA1), np.fliplr(np.eye(4)))


def test_kron_mixed_product():
    rng = np.random.default_rng(11)
    for _ in range(50):
        a, b, c, d = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(4))
        lhs = kron(a, b) @ kron(c, d)
        rhs = kron(a @ c, b @ d)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_eigenvalues_identity_quarter():
    assert np.allclose(hermitian_eigenvalues(np.eye(4) / 4), [0.25] * 4, atol=1e-14)


def test_eigenvalues_diagonal_descending():
    m = np.diag([1.0, 3.0, 2.0, 4.0]).astype(complex)
    assert np.allclose(hermitian_eigenvalues(m), [4.0, 3.0, 2.0, 1.0], atol=1e-14)


def test_eigenvalue_sum_is_trace():
    rng = np.random.default_rng(12)
    for _ in range(100):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        m = g + dag(g)
        assert abs(hermitian_eigenvalues(m).sum() - np.trace(m).real) < 1e-10


def test_eigenvalues_reject_non_hermitian():
    m = np.eye(4, dtype=complex)
    m[0, 1] = 0.5
    with pytest.raises(NonHermitianInput):
        hermitian_eigenvalues(m)


def test_validate_density_matrix_rejects():
    with pytest.raises(InvalidState):
        validate_density_matrix(np.eye(4) / 2)  # trace 2
    bad = np.eye(4, dtype=complex) / 4
    bad[0, 1] = 0.1
    with pytest.raises(InvalidState):
        validate_density_matrix(bad)  # not Hermitian
    with pytest.raises(InvalidState):
        validate_density_matrix(np.diag([1.5, -0.5, 0.0, 0.0]).astype(complex))  # negative eig


def test_entropy_maximally_mixed():
    assert abs(von_neumann_entropy(np.eye(4) / 4) - 2.0) < 1e-12


def test_entropy_pure_state():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0
    assert abs(von_neumann_entropy(rho)) < 1e-12


def test_entropy_unitary_invariance():
    rng = np.random.default_rng(13)
    for _ in range(30):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = g @ dag(g)
        rho = rho / np.trace(rho).real
        u1, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
        u2, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
        u = kron(u1, u2)
        assert abs(von_neumann_entropy(u @ rho @ dag(u)) - von_neumann_entropy(rho)) < 1e-10


def test_entropy_bounds():
    rng = np.random.default_rng(14)
    for _ in range(100):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = g @ dag(g)
        rho = rho / np.trace(rho).real
        s = von_neumann_entropy(rho)
        assert -1e-12 <= s <= 2.0 + 1e-12


def test_shannon_entropy_conventions():
    # 0 log 0 contributes nothing; tiny negatives from eigensolvers clip to 0
    assert shannon_entropy(np.array([0.5, 0.5, 0.0, 0.0])) == 1.0
    assert abs(shannon_entropy(np.array([1.0, -1e-14, 0.0, 0.0]))) < 1e-12


def test_pauli_constants():
    for sigma in PAULIS:
        assert np.array_equal(sigma @ sigma, ID2)
        assert np.max(np.abs(sigma - dag(sigma))) == 0.0
