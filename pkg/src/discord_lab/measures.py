"""Correlation and discord measures for two-qubit states.

Geometric discord is normalized so the Bell states sit at 1, i.e.

    D_G(rho) = 2 * min_P || rho - P(rho) ||_HS^2

with the minimum over complete projective measurements P on qubit A. The
closed form uses the Pauli decomposition; `geometric_discord_bruteforce`
minimizes the defining disturbance directly on an angular grid and is kept
deliberately independent of the closed form so the two can check each other.
"""

from __future__ import annotations

import numpy as np

from .linalg import partial_trace, partial_transpose_b, trace_norm
from .states import IDENTITY_2, pauli_decomposition, projector_pair

DEFAULT_GRID = (181, 360)
REFINE_STEP = 1e-7

_GRID_OPS: dict = {}

__all__ = [
    "DEFAULT_GRID",
    "measurement_channel",
    "geometric_discord_closed",
    "geometric_discord_bruteforce",
    "trace_distance_discord",
    "correlation_matrix",
    "max_mutual_correlation",
    "correlation_distance",
    "negativity",
    "cm_cc_analytic",
    "cm_cq_analytic",
]


def measurement_channel(rho, theta: float, phi: float) -> np.ndarray:
    """Apply the complete projective measurement (theta, phi) on qubit A.

    Returns sum_k (P_k (x) I) rho (P_k (x) I); a completely positive,
    trace-preserving, idempotent map.
    """
    rho = np.asarray(rho, dtype=complex)
    p1, p2 = projector_pair(theta, phi)
    k1 = np.kron(p1, IDENTITY_2)
    k2 = np.kron(p2, IDENTITY_2)
    return k1 @ rho @ k1 + k2 @ rho @ k2


def geometric_discord_closed(rho):
    """Geometric discord from the Pauli decomposition.

    D_G = (|x|^2 + ||t||_HS^2 - k_max)/2 where k_max is the largest
    eigenvalue of x x^T + t t^T. Accepts a batch of states in the leading
    dimensions; returns a float for a single state.
    """
    x, _, t = pauli_decomposition(rho)
    k = x[..., :, None] * x[..., None, :] + t @ np.swapaxes(t, -1, -2)
    kmax = np.linalg.eigvalsh(k)[..., -1]
    val = 0.5 * ((x**2).sum(axis=-1) + (t**2).sum(axis=(-2, -1)) - kmax)
    val = np.maximum(val, 0.0)
    return float(val) if val.ndim == 0 else val


def _grid_ops(grid):
    """Cached batched measurement operators P_k (x) I over an angle grid."""
    key = (int(grid[0]), int(grid[1]))
    if key not in _GRID_OPS:
        n_theta, n_phi = key
        thetas = np.linspace(0.0, np.pi / 2, n_theta)
        phis = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
        th, ph = (a.ravel() for a in np.meshgrid(thetas, phis, indexing="ij"))
        c2 = np.cos(th) ** 2
        s2 = np.sin(th) ** 2
        off = 0.5 * np.exp(-1j * ph) * np.sin(2.0 * th)
        p1 = np.empty((th.size, 2, 2), dtype=complex)
        p1[:, 0, 0] = c2
        p1[:, 0, 1] = off
        p1[:, 1, 0] = off.conj()
        p1[:, 1, 1] = s2
        k1 = np.einsum("nij,kl->nikjl", p1, IDENTITY_2).reshape(-1, 4, 4)
        k2 = np.eye(4, dtype=complex) - k1
        step = max(np.pi / 2 / (n_theta - 1), 2.0 * np.pi / n_phi)
        _GRID_OPS[key] = (th, ph, k1, k2, step)
    return _GRID_OPS[key]


def _compass_refine(objective, theta, phi, step):
    """Pattern search on (theta, phi), halving the step until < REFINE_STEP."""
    best = objective(theta, phi)
    while step >= REFINE_STEP:
        moves = ((step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step))
        cands = [(objective(theta + dt, phi + dp), theta + dt, phi + dp) for dt, dp in moves]
        top = min(cands)
        if top[0] < best:
            best, theta, phi = top
        else:
            step *= 0.5
    return best, theta, phi


def _hs_disturbance(rho, theta, phi) -> float:
    d = measurement_channel(rho, theta, phi) - rho
    return float((np.abs(d) ** 2).sum())


def geometric_discord_bruteforce(rho, grid=DEFAULT_GRID):
    """Minimize the measurement disturbance directly over (theta, phi).

    Scans the full angle grid, then refines the best point by pattern search
    down to angular steps below 1e-7 rad. Returns ``(value, theta, phi)``
    with value = 2 * min ||rho - P(rho)||_HS^2 and the minimizing angles.
    """
    rho = np.asarray(rho, dtype=complex)
    th, ph, k1, k2, step = _grid_ops(grid)
    d = k1 @ rho @ k1 + k2 @ rho @ k2 - rho
    f = np.einsum("nij,nij->n", d, d.conj()).real
    i = int(f.argmin())
    best, theta, phi = _compass_refine(
        lambda t, p: _hs_disturbance(rho, t, p), th[i], ph[i], step
    )
    return 2.0 * best, theta, phi


def trace_distance_discord(rho, grid=DEFAULT_GRID) -> float:
    """Trace-distance discord min_P || rho - P(rho) ||_1, minimized numerically.

    Same grid-plus-refinement scheme as the brute-force geometric discord;
    there is no closed form to fall back on, so the grid resolution controls
    the quality of the (upper-bound) estimate.
    """
    rho = np.asarray(rho, dtype=complex)
    th, ph, k1, k2, step = _grid_ops(grid)
    d = k1 @ rho @ k1 + k2 @ rho @ k2 - rho
    w = np.linalg.eigvalsh(d)
    f = np.abs(w).sum(axis=-1)
    i = int(f.argmin())

    def objective(theta, phi):
        return trace_norm(measurement_channel(rho, theta, phi) - rho)

    best, _, _ = _compass_refine(objective, th[i], ph[i], step)
    return best


def correlation_matrix(rho) -> np.ndarray:
    """Covariance-like tensor q_jk = t_jk - x_j y_k of the Pauli decomposition."""
    x, y, t = pauli_decomposition(rho)
    return t - x[..., :, None] * y[..., None, :]


def max_mutual_correlation(rho):
    """Largest singular value of the correlation matrix.

    Zero exactly on product states; for classically correlated states it
    reduces to the covariance of the measured variables.
    """
    q = correlation_matrix(rho)
    s = np.linalg.svd(q, compute_uv=False)[..., 0]
    return float(s) if s.ndim == 0 else s


def correlation_distance(rho) -> float:
    """Trace distance || rho - rho_A (x) rho_B ||_1 to the product of marginals."""
    rho = np.asarray(rho, dtype=complex)
    prod = np.kron(partial_trace(rho, "A"), partial_trace(rho, "B"))
    return trace_norm(rho - prod)


def negativity(rho) -> float:
    """Normalized negativity || rho^T_B ||_1 - 1, clamped to be non-negative.

    Partial-transpose eigenvalues within 1e-12 below zero are treated as
    rounding noise and clamped before summing.
    """
    rho = np.asarray(rho, dtype=complex)
    pt = partial_transpose_b(rho)
    w = np.linalg.eigvalsh(0.5 * (pt + pt.conj().T))
    w = np.where((w < 0.0) & (w >= -1e-12), 0.0, w)
    return max(float(np.abs(w).sum() - 1.0), 0.0)


def cm_cc_analytic(p) -> float:
    """|Cov(X, Y)| of the +/-1 outcome variables of a classically correlated state.

    Matches max_mutual_correlation(cc_state(p, ...)) for any projector pairs.
    """
    p = np.asarray(p, dtype=float)
    if p.shape != (2, 2):
        raise ValueError(f"joint distribution must be 2x2, got shape {p.shape}")
    e_xy = p[0, 0] + p[1, 1] - p[0, 1] - p[1, 0]
    e_x = p[0].sum() - p[1].sum()
    e_y = p[:, 0].sum() - p[:, 1].sum()
    return abs(e_xy - e_x * e_y)


def cm_cq_analytic(p, a1, a2) -> float:
    """Maximal mutual correlation 2 p1 p2 |a1 - a2| of a classical-quantum state."""
    p = np.asarray(p, dtype=float)
    a1 = np.asarray(a1, dtype=float)
    a2 = np.asarray(a2, dtype=float)
    return 2.0 * p[0] * p[1] * np.linalg.norm(a1 - a2)
