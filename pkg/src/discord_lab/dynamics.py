"""Spontaneous-emission dynamics of two qubits.

Each qubit decays independently (amplitude damping toward |g>) under the
generator

    L_k rho = (gamma0/2) (2 s-_k rho s+_k - s+_k s-_k rho - rho s+_k s-_k)

acting on side A, side B, or both. Time is handled in dimensionless gamma0*t
units throughout; gamma0 only matters at I/O boundaries. The closed-form
propagators are element-wise in the product basis and are cross-checked by a
fixed-step RK4 integration of the master equation (`integrate_lindblad`),
which is kept free of any closed-form input so it can serve as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import partial_trace
from .states import IDENTITY_2, KET_G, SIGMA_MINUS, SIGMA_PLUS, SWAP, swap_subsystems

TWO_SIDED = "two-sided"
ONE_SIDED_A = "one-sided-a"
ONE_SIDED_B = "one-sided-b"
CHANNEL_KINDS = (TWO_SIDED, ONE_SIDED_A, ONE_SIDED_B)

_SM_A = np.kron(SIGMA_MINUS, IDENTITY_2)
_SP_A = np.kron(SIGMA_PLUS, IDENTITY_2)
_SM_B = np.kron(IDENTITY_2, SIGMA_MINUS)
_SP_B = np.kron(IDENTITY_2, SIGMA_PLUS)

__all__ = [
    "TWO_SIDED",
    "ONE_SIDED_A",
    "ONE_SIDED_B",
    "CHANNEL_KINDS",
    "EmissionChannel",
    "propagate",
    "propagate_two_sided",
    "propagate_one_sided_a",
    "propagate_one_sided_b",
    "propagate_one_sided_a_uncorrected",
    "propagate_trajectory",
    "lindblad_rhs",
    "integrate_lindblad",
    "asymptotic_state",
]


@dataclass(frozen=True)
class EmissionChannel:
    """Which sides emit, and at what rate."""

    kind: str = TWO_SIDED
    gamma0: float = 1.0

    def __post_init__(self):
        if self.kind not in CHANNEL_KINDS:
            raise ValueError(f"kind must be one of {CHANNEL_KINDS}, got {self.kind!r}")
        if not self.gamma0 > 0.0:
            raise ValueError(f"gamma0 must be positive, got {self.gamma0}")


def _as_channel(channel) -> EmissionChannel:
    if isinstance(channel, EmissionChannel):
        return channel
    return EmissionChannel(kind=channel)


def _check_tau(gamma0t) -> np.ndarray:
    tau = np.asarray(gamma0t, dtype=float)
    if (tau < 0).any():
        raise ValueError("gamma0t must be non-negative")
    return tau


def _hermitian_fill(out) -> np.ndarray:
    for i in range(4):
        for j in range(i + 1, 4):
            out[..., j, i] = out[..., i, j].conj()
    return out


def _two_sided_elements(rho, tau) -> np.ndarray:
    e1 = np.exp(-tau)
    e2 = np.exp(-2.0 * tau)
    e12 = np.exp(-0.5 * tau)
    e32 = np.exp(-1.5 * tau)
    q = 1.0 - e1
    out = np.zeros(tau.shape + (4, 4), dtype=complex)
    out[..., 0, 0] = e2 * rho[0, 0]
    out[..., 0, 1] = e32 * rho[0, 1]
    out[..., 0, 2] = e32 * rho[0, 2]
    out[..., 0, 3] = e1 * rho[0, 3]
    out[..., 1, 1] = (e1 - e2) * rho[0, 0] + e1 * rho[1, 1]
    out[..., 2, 2] = (e1 - e2) * rho[0, 0] + e1 * rho[2, 2]
    out[..., 1, 2] = e1 * rho[1, 2]
    out[..., 1, 3] = (e12 - e32) * rho[0, 2] + e12 * rho[1, 3]
    out[..., 2, 3] = (e12 - e32) * rho[0, 1] + e12 * rho[2, 3]
    out[..., 3, 3] = q * q * rho[0, 0] + q * (rho[1, 1] + rho[2, 2]) + rho[3, 3]
    return _hermitian_fill(out)


def _one_sided_a_elements(rho, tau, feed_sign: float = -1.0) -> np.ndarray:
    # feed_sign = -1 gives the correct (1 - e^{-tau}) coherence feed; +1 is
    # the sign-flipped variant kept only for the verify-typo demonstration.
    e1 = np.exp(-tau)
    e12 = np.exp(-0.5 * tau)
    q = 1.0 - np.exp(feed_sign * tau)
    out = np.zeros(tau.shape + (4, 4), dtype=complex)
    out[..., 0, 0] = e1 * rho[0, 0]
    out[..., 0, 1] = e1 * rho[0, 1]
    out[..., 1, 1] = e1 * rho[1, 1]
    out[..., 0, 2] = e12 * rho[0, 2]
    out[..., 0, 3] = e12 * rho[0, 3]
    out[..., 1, 2] = e12 * rho[1, 2]
    out[..., 1, 3] = e12 * rho[1, 3]
    out[..., 2, 2] = (1.0 - e1) * rho[0, 0] + rho[2, 2]
    out[..., 2, 3] = q * rho[0, 1] + rho[2, 3]
    out[..., 3, 3] = (1.0 - e1) * rho[1, 1] + rho[3, 3]
    return _hermitian_fill(out)


def propagate_two_sided(rho, gamma0t: float) -> np.ndarray:
    """Closed-form state at dimensionless time gamma0t with both qubits emitting."""
    rho = np.asarray(rho, dtype=complex)
    tau = _check_tau(gamma0t)
    return _two_sided_elements(rho, tau)


def propagate_one_sided_a(rho, gamma0t: float) -> np.ndarray:
    """Closed-form state at gamma0t with only qubit A emitting."""
    rho = np.asarray(rho, dtype=complex)
    tau = _check_tau(gamma0t)
    return _one_sided_a_elements(rho, tau)


def propagate_one_sided_b(rho, gamma0t: float) -> np.ndarray:
    """Closed-form state at gamma0t with only qubit B emitting.

    Realized by swap conjugation of the A-side propagator, so the two
    one-sided channels cannot drift apart.
    """
    rho = np.asarray(rho, dtype=complex)
    tau = _check_tau(gamma0t)
    return swap_subsystems(_one_sided_a_elements(swap_subsystems(rho), tau))


def propagate_one_sided_a_uncorrected(rho, gamma0t: float) -> np.ndarray:
    """A-side propagator with the wrong sign in the rho_34 feed exponent.

    This variant grows like e^{+gamma0t} in one matrix element and violates
    positivity almost immediately; it exists only as the foil for the
    `verify-typo` CLI command and the corresponding tests.
    """
    rho = np.asarray(rho, dtype=complex)
    tau = _check_tau(gamma0t)
    return _one_sided_a_elements(rho, tau, feed_sign=+1.0)


def propagate(rho, kind: str, gamma0t: float) -> np.ndarray:
    """Dispatch to the closed-form propagator for the given channel kind."""
    if kind == TWO_SIDED:
        return propagate_two_sided(rho, gamma0t)
    if kind == ONE_SIDED_A:
        return propagate_one_sided_a(rho, gamma0t)
    if kind == ONE_SIDED_B:
        return propagate_one_sided_b(rho, gamma0t)
    raise ValueError(f"kind must be one of {CHANNEL_KINDS}, got {kind!r}")


def propagate_trajectory(rho, kind: str, gamma0t) -> np.ndarray:
    """Vectorized propagation over an array of times; returns shape (n, 4, 4).

    Every point is computed directly from t = 0 through the closed form, so
    the samples are independent of each other.
    """
    rho = np.asarray(rho, dtype=complex)
    tau = _check_tau(np.atleast_1d(gamma0t))
    if kind == TWO_SIDED:
        return _two_sided_elements(rho, tau)
    if kind == ONE_SIDED_A:
        return _one_sided_a_elements(rho, tau)
    if kind == ONE_SIDED_B:
        out = _one_sided_a_elements(swap_subsystems(rho), tau)
        return SWAP @ out @ SWAP
    raise ValueError(f"kind must be one of {CHANNEL_KINDS}, got {kind!r}")


def lindblad_rhs(rho, channel) -> np.ndarray:
    """Right-hand side d rho/dt of the master equation for the given channel."""
    ch = _as_channel(channel)
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros_like(rho)
    sides = []
    if ch.kind in (TWO_SIDED, ONE_SIDED_A):
        sides.append((_SM_A, _SP_A))
    if ch.kind in (TWO_SIDED, ONE_SIDED_B):
        sides.append((_SM_B, _SP_B))
    for sm, sp in sides:
        n = sp @ sm
        out += 0.5 * ch.gamma0 * (2.0 * (sm @ rho @ sp) - n @ rho - rho @ n)
    return out


def integrate_lindblad(rho, channel, gamma0t: float, dt: float = 1e-4) -> np.ndarray:
    """Fixed-step RK4 integration of the master equation up to gamma0t.

    dt is the step in gamma0t units and must be <= 1e-3. This is the
    numerical oracle for the closed-form propagators: it touches only
    `lindblad_rhs`, never the element-wise solutions.
    """
    if dt > 1e-3:
        raise ValueError(f"dt must be <= 1e-3, got {dt}")
    if not dt > 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    tau = float(gamma0t)
    if tau < 0:
        raise ValueError("gamma0t must be non-negative")
    ch = _as_channel(channel)
    unit = EmissionChannel(kind=ch.kind, gamma0=1.0)
    rho = np.asarray(rho, dtype=complex).copy()
    if tau == 0.0:
        return rho
    n_steps = int(np.ceil(tau / dt - 1e-12))
    h = tau / n_steps
    for _ in range(n_steps):
        k1 = lindblad_rhs(rho, unit)
        k2 = lindblad_rhs(rho + 0.5 * h * k1, unit)
        k3 = lindblad_rhs(rho + 0.5 * h * k2, unit)
        k4 = lindblad_rhs(rho + h * k3, unit)
        rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return rho


def asymptotic_state(rho, channel) -> np.ndarray:
    """t -> infinity limit of the channel applied to rho."""
    ch = _as_channel(channel)
    rho = np.asarray(rho, dtype=complex)
    ground = np.outer(KET_G, KET_G.conj())
    if ch.kind == TWO_SIDED:
        return np.kron(ground, ground)
    if ch.kind == ONE_SIDED_A:
        return np.kron(ground, partial_trace(rho, "B"))
    return np.kron(partial_trace(rho, "A"), ground)
