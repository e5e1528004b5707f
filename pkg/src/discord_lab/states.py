"""Two-qubit states, Pauli decompositions, samplers, and state-file I/O.

Conventions used across the package:

* basis order ``|ee>, |eg>, |ge>, |gg>`` with ``|e> = (1, 0)^T`` (excited)
  and ``|g> = (0, 1)^T`` (ground), so ``sigma_z |e> = +|e>``;
* qubit A is the first tensor factor;
* ``sigma_minus = (sigma_x - i sigma_y)/2`` lowers ``|e>`` to ``|g>``.
"""

from __future__ import annotations

import json
from typing import NamedTuple

import numpy as np

from .linalg import TOL_HERM, tensor_product

TOL_PSD = 1e-9

BASIS_LABELS = ("ee", "eg", "ge", "gg")

KET_E = np.array([1.0, 0.0], dtype=complex)
KET_G = np.array([0.0, 1.0], dtype=complex)

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)

# |ij> -> |ji> on the product basis.
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)

_PAULI = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])
_PAULI_A = np.stack([np.kron(s, IDENTITY_2) for s in _PAULI])
_PAULI_B = np.stack([np.kron(IDENTITY_2, s) for s in _PAULI])
_PAULI_AB = np.stack(
    [np.stack([np.kron(sj, sk) for sk in _PAULI]) for sj in _PAULI]
)

__all__ = [
    "TOL_PSD",
    "BASIS_LABELS",
    "KET_E",
    "KET_G",
    "IDENTITY_2",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SIGMA_MINUS",
    "SIGMA_PLUS",
    "SWAP",
    "InvalidStateError",
    "validate_density_matrix",
    "qubit_from_bloch",
    "projector_pair",
    "cc_state",
    "cq_state",
    "rho_zero",
    "PauliDecomposition",
    "pauli_decomposition",
    "state_from_pauli",
    "swap_subsystems",
    "random_density_matrix",
    "random_cc_state",
    "random_cq_state",
    "random_bell_diagonal",
    "state_to_dict",
    "state_from_dict",
    "write_state",
    "read_state",
]


class InvalidStateError(ValueError):
    """Raised when a matrix fails a density-matrix invariant."""


def validate_density_matrix(rho, tol_psd: float = TOL_PSD) -> np.ndarray:
    """Check Hermiticity, unit trace, and positivity of a 4x4 state.

    Positivity allows eigenvalues down to ``-tol_psd``; propagated states can
    pick up rounding-level negative eigenvalues. Returns the input as a
    complex array, raises InvalidStateError naming the violated invariant.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidStateError(f"state must be 4x4, got shape {rho.shape}")
    dev = np.abs(rho - rho.conj().T).max()
    if dev > TOL_HERM:
        raise InvalidStateError(
            f"state is not Hermitian: max |rho - rho^dag| = {dev:.3e}"
        )
    tr = rho.trace()
    if abs(tr - 1.0) > 1e-10:
        raise InvalidStateError(f"state trace is {tr:.12g}, expected 1")
    w = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    if w[0] < -tol_psd:
        raise InvalidStateError(
            f"state is not positive: smallest eigenvalue {w[0]:.3e} < -{tol_psd:g}"
        )
    return rho


def qubit_from_bloch(a) -> np.ndarray:
    """Single-qubit state (I + a.sigma)/2 for a Bloch vector inside the ball."""
    a = np.asarray(a, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"Bloch vector must have 3 components, got shape {a.shape}")
    norm = np.linalg.norm(a)
    if norm > 1.0 + 1e-12:
        raise ValueError(f"Bloch vector has norm {norm:.12g} > 1")
    return 0.5 * (IDENTITY_2 + a[0] * SIGMA_X + a[1] * SIGMA_Y + a[2] * SIGMA_Z)


def projector_pair(theta: float, phi: float) -> tuple[np.ndarray, np.ndarray]:
    """Orthogonal rank-1 projectors along the Bloch direction (theta, phi).

    P1 projects onto the +1 eigenstate of n.sigma with
    n = (sin 2theta cos phi, sin 2theta sin phi, cos 2theta); P2 = I - P1.
    """
    c, s = np.cos(theta) ** 2, np.sin(theta) ** 2
    off = 0.5 * np.exp(-1j * phi) * np.sin(2.0 * theta)
    p1 = np.array([[c, off], [np.conj(off), s]], dtype=complex)
    return p1, IDENTITY_2 - p1


def _check_distribution(p: np.ndarray, what: str) -> None:
    if (p < 0).any():
        raise ValueError(f"{what} has a negative entry: {p.min():.3e}")
    if abs(p.sum() - 1.0) > 1e-12:
        raise ValueError(f"{what} sums to {p.sum():.15g}, expected 1")


def cc_state(p, pair_a, pair_b) -> np.ndarray:
    """Classically correlated state sum_jk p[j,k] P_j^A (x) P_k^B.

    Parameters
    ----------
    p : 2x2 array-like
        Joint distribution over the two projector outcomes, rows for side A.
    pair_a, pair_b : (theta, phi)
        Projector-pair angles for each side. The two sides may differ.
    """
    p = np.asarray(p, dtype=float)
    if p.shape != (2, 2):
        raise ValueError(f"joint distribution must be 2x2, got shape {p.shape}")
    _check_distribution(p, "joint distribution")
    pa = projector_pair(*pair_a)
    pb = projector_pair(*pair_b)
    rho = np.zeros((4, 4), dtype=complex)
    for j in range(2):
        for k in range(2):
            rho += p[j, k] * tensor_product(pa[j], pb[k])
    return validate_density_matrix(rho)


def cq_state(p, pair_a, a1, a2) -> np.ndarray:
    """Classical-quantum state p1 P1 (x) rho(a1) + p2 P2 (x) rho(a2).

    The A side is projective with angles ``pair_a``; the B side carries
    arbitrary qubit states given by Bloch vectors a1, a2.
    """
    p = np.asarray(p, dtype=float)
    if p.shape != (2,):
        raise ValueError(f"distribution must have 2 entries, got shape {p.shape}")
    _check_distribution(p, "distribution")
    p1, p2 = projector_pair(*pair_a)
    rho = p[0] * tensor_product(p1, qubit_from_bloch(a1)) + p[1] * tensor_product(
        p2, qubit_from_bloch(a2)
    )
    return validate_density_matrix(rho)


def rho_zero() -> np.ndarray:
    """The classically correlated workhorse state (I (x) I - sigma_x (x) sigma_x)/4.

    Equal mixture of |+-><+-| and |-+><-+| with |+-> = |+>|-> etc.; all four
    diagonal entries are 1/4 and both marginals are maximally mixed.
    """
    return 0.25 * (np.eye(4, dtype=complex) - np.kron(SIGMA_X, SIGMA_X))


class PauliDecomposition(NamedTuple):
    """Bloch vectors x, y and 3x3 correlation tensor t of a two-qubit state."""

    x: np.ndarray
    y: np.ndarray
    t: np.ndarray


def pauli_decomposition(rho) -> PauliDecomposition:
    """Local Bloch vectors and correlation tensor of rho.

    x_j = tr(rho sigma_j (x) I), y_k = tr(rho I (x) sigma_k),
    t_jk = tr(rho sigma_j (x) sigma_k). Accepts a batch of states in the
    leading dimensions and then returns batched components.
    """
    rho = np.asarray(rho, dtype=complex)
    x = np.einsum("...ij,kji->...k", rho, _PAULI_A).real
    y = np.einsum("...ij,kji->...k", rho, _PAULI_B).real
    t = np.einsum("...ij,klji->...kl", rho, _PAULI_AB).real
    return PauliDecomposition(x, y, t)


def state_from_pauli(x, y, t) -> np.ndarray:
    """Inverse of pauli_decomposition: rebuild rho from (x, y, t)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    t = np.asarray(t, dtype=float)
    rho = np.eye(4, dtype=complex)
    rho += np.einsum("j,jab->ab", x, _PAULI_A)
    rho += np.einsum("k,kab->ab", y, _PAULI_B)
    rho += np.einsum("jk,jkab->ab", t, _PAULI_AB)
    return 0.25 * rho


def swap_subsystems(rho) -> np.ndarray:
    """Exchange the A and B qubits: S rho S with S the swap matrix."""
    rho = np.asarray(rho, dtype=complex)
    return SWAP @ rho @ SWAP


def _simplex(rng: np.random.Generator, n: int) -> np.ndarray:
    # Uniform on the probability simplex via sorted uniforms.
    cuts = np.sort(rng.uniform(0.0, 1.0, size=n - 1))
    return np.diff(np.concatenate(([0.0], cuts, [1.0])))


def _sphere_point(rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_density_matrix(seed, rank: int = 4) -> np.ndarray:
    """Random 4x4 state of the given rank: G G^dag / tr(G G^dag), G Ginibre."""
    if rank not in (1, 2, 3, 4):
        raise ValueError(f"rank must be 1..4, got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((4, rank)) + 1j * rng.standard_normal((4, rank))
    m = g @ g.conj().T
    return m / m.trace().real


def random_cc_state(seed) -> np.ndarray:
    """Random classically correlated state.

    Draws a joint distribution uniformly from the simplex and independent
    projector pairs with theta ~ U[0, pi/2], phi ~ U[0, 2pi) per side.
    """
    rng = np.random.default_rng(seed)
    p = _simplex(rng, 4).reshape(2, 2)
    th = rng.uniform(0.0, np.pi / 2, size=2)
    ph = rng.uniform(0.0, 2.0 * np.pi, size=2)
    return cc_state(p, (th[0], ph[0]), (th[1], ph[1]))


def random_cq_state(seed) -> np.ndarray:
    """Random classical-quantum state.

    Draws (p1, p2) uniformly from the simplex, one projector pair, and two
    B-side Bloch vectors with uniform directions and radii uniform in [0, 1].
    """
    rng = np.random.default_rng(seed)
    p = _simplex(rng, 2)
    theta = rng.uniform(0.0, np.pi / 2)
    phi = rng.uniform(0.0, 2.0 * np.pi)
    a1 = rng.uniform() * _sphere_point(rng)
    a2 = rng.uniform() * _sphere_point(rng)
    return cq_state(p, (theta, phi), a1, a2)


def random_bell_diagonal(seed) -> np.ndarray:
    """Random mixture of the four Bell states with simplex weights."""
    rng = np.random.default_rng(seed)
    lam = _simplex(rng, 4)
    s = 1.0 / np.sqrt(2.0)
    bell = np.array(
        [
            [s, 0, 0, s],
            [s, 0, 0, -s],
            [0, s, s, 0],
            [0, s, -s, 0],
        ],
        dtype=complex,
    )
    return np.einsum("k,ki,kj->ij", lam, bell, bell.conj())


def state_to_dict(rho) -> dict:
    """JSON-ready dict with the basis label and [re, im] entry pairs."""
    rho = np.asarray(rho, dtype=complex)
    matrix = [
        [[float(rho[i, j].real), float(rho[i, j].imag)] for j in range(4)]
        for i in range(4)
    ]
    return {"basis": ",".join(BASIS_LABELS), "matrix": matrix}


def state_from_dict(d: dict, tol_psd: float = TOL_PSD) -> np.ndarray:
    """Parse and validate a state dict produced by state_to_dict."""
    expected = ",".join(BASIS_LABELS)
    if d.get("basis") != expected:
        raise InvalidStateError(
            f"basis must be {expected!r}, got {d.get('basis')!r}"
        )
    matrix = d.get("matrix")
    arr = np.asarray(matrix, dtype=float)
    if arr.shape != (4, 4, 2):
        raise InvalidStateError(
            f"matrix must be 4x4 with [re, im] entries, got shape {arr.shape}"
        )
    rho = arr[..., 0] + 1j * arr[..., 1]
    return validate_density_matrix(rho, tol_psd=tol_psd)


def write_state(path, rho) -> None:
    """Write a state to a JSON file; floats round-trip exactly."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(state_to_dict(rho), fh, indent=1)
        fh.write("\n")


def read_state(path, tol_psd: float = TOL_PSD) -> np.ndarray:
    """Read and validate a state JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        return state_from_dict(json.load(fh), tol_psd=tol_psd)
