import numpy as np
import pytest
from numpy.testing import assert_allclose

from discord_lab.linalg import (
    hermitian_eigenvalues,
    hs_norm,
    largest_singular_value,
    partial_trace,
    partial_transpose_b,
    tensor_product,
    trace_norm,
)
from discord_lab.states import SIGMA_X, pauli_decomposition, rho_zero

from conftest import bell_phi_plus


def random_hermitian(rng, n=4):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return g + g.conj().T


def test_tensor_product_sigma_x_pair():
    m = tensor_product(SIGMA_X, SIGMA_X)
    expected = np.zeros((4, 4))
    expected[0, 3] = expected[1, 2] = expected[2, 1] = expected[3, 0] = 1.0
    assert_allclose(m, expected, atol=1e-15)


def test_tensor_product_rejects_wrong_shapes():
    with pytest.raises(ValueError):
        tensor_product(np.eye(3), np.eye(2))
    with pytest.raises(ValueError):
        tensor_product(np.eye(2), np.eye(4))


def test_partial_trace_of_product(rng):
    a = random_hermitian(rng, 2)
    b = random_hermitian(rng, 2)
    m = np.kron(a, b)
    assert_allclose(partial_trace(m, "A"), a * np.trace(b), atol=1e-12)
    assert_allclose(partial_trace(m, "B"), b * np.trace(a), atol=1e-12)


def test_partial_trace_rho_zero_marginals():
    assert_allclose(partial_trace(rho_zero(), "A"), 0.5 * np.eye(2), atol=1e-14)
    assert_allclose(partial_trace(rho_zero(), "B"), 0.5 * np.eye(2), atol=1e-14)


def test_partial_trace_bad_args():
    with pytest.raises(ValueError):
        partial_trace(np.eye(2), "A")
    with pytest.raises(ValueError):
        partial_trace(np.eye(4), "C")


def test_partial_transpose_is_involution(rng):
    m = random_hermitian(rng)
    assert_allclose(partial_transpose_b(partial_transpose_b(m)), m, atol=0)


def test_partial_transpose_on_kron(rng):
    a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    assert_allclose(partial_transpose_b(np.kron(a, b)), np.kron(a, b.T), atol=1e-14)


def test_partial_transpose_bell_eigenvalues():
    w = hermitian_eigenvalues(partial_transpose_b(bell_phi_plus()))
    assert_allclose(w, [0.5, 0.5, 0.5, -0.5], atol=1e-12)


def test_hermitian_eigenvalues_descending_and_trace(rng):
    for _ in range(25):
        m = random_hermitian(rng)
        w = hermitian_eigenvalues(m)
        assert (np.diff(w) <= 1e-14).all()
        assert abs(w.sum() - np.trace(m).real) <= 1e-12


def test_hermitian_eigenvalues_rejects_non_hermitian():
    m = np.eye(4, dtype=complex)
    m[0, 1] = 1e-6
    with pytest.raises(ValueError):
        hermitian_eigenvalues(m)


def test_hermitian_eigenvalues_symmetrizes_roundoff():
    m = np.diag([3.0, 2.0, 1.0, 0.0]).astype(complex)
    m[0, 1] += 5e-11  # below tolerance, must be absorbed
    w = hermitian_eigenvalues(m)
    assert_allclose(w, [3.0, 2.0, 1.0, 0.0], atol=1e-10)


def test_hermitian_eigenvalues_rho_zero_k_matrix():
    # x x^T + t t^T for the reference classical state has spectrum (1, 0, 0).
    x, _, t = pauli_decomposition(rho_zero())
    k = np.outer(x, x) + t @ t.T
    assert_allclose(hermitian_eigenvalues(k), [1.0, 0.0, 0.0], atol=1e-14)


def test_trace_norm_of_correlation_part():
    rho = rho_zero()
    prod = np.kron(partial_trace(rho, "A"), partial_trace(rho, "B"))
    assert_allclose(trace_norm(rho - prod), 1.0, atol=1e-12)


def test_trace_norm_matches_svd_for_general_matrix(rng):
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert_allclose(trace_norm(m), np.linalg.svd(m, compute_uv=False).sum(), rtol=1e-12)


def test_hs_norm_pure_state():
    assert_allclose(hs_norm(bell_phi_plus()), 1.0, atol=1e-14)


def test_hs_norm_matches_definition(rng):
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert_allclose(hs_norm(m), np.sqrt(np.trace(m.conj().T @ m).real), rtol=1e-12)


def test_largest_singular_value():
    assert_allclose(largest_singular_value(np.diag([-1.0, 0.0, 0.0])), 1.0, atol=1e-14)
