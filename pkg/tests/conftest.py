import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def bell_phi_plus() -> np.ndarray:
    v = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    return np.outer(v, v.conj())


def bell_psi_plus() -> np.ndarray:
    v = np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2)
    return np.outer(v, v.conj())


def random_unitary_2(rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))
