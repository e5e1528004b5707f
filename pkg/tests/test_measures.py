import numpy as np
import pytest
from numpy.testing import assert_allclose

from discord_lab.measures import (
    cm_cc_analytic,
    cm_cq_analytic,
    correlation_distance,
    correlation_matrix,
    geometric_discord_bruteforce,
    geometric_discord_closed,
    max_mutual_correlation,
    measurement_channel,
    negativity,
    trace_distance_discord,
)
from discord_lab.states import (
    cc_state,
    cq_state,
    qubit_from_bloch,
    random_bell_diagonal,
    random_cc_state,
    random_cq_state,
    random_density_matrix,
    rho_zero,
    validate_density_matrix,
)

from conftest import bell_phi_plus, random_unitary_2


def test_measurement_channel_is_idempotent_and_trace_preserving():
    rho = random_density_matrix(11)
    out = measurement_channel(rho, 0.4, 2.5)
    validate_density_matrix(out)
    assert_allclose(measurement_channel(out, 0.4, 2.5), out, atol=1e-13)
    assert_allclose(np.trace(out), 1.0, atol=1e-13)


def test_measurement_channel_bell_in_energy_basis():
    out = measurement_channel(bell_phi_plus(), 0.0, 0.0)
    assert_allclose(out, np.diag([0.5, 0.0, 0.0, 0.5]), atol=1e-14)


def test_geometric_discord_bell_is_one():
    assert_allclose(geometric_discord_closed(bell_phi_plus()), 1.0, atol=1e-12)


def test_geometric_discord_zero_on_product_states():
    for seed in range(10):
        s = np.random.default_rng(seed)
        a = s.uniform() * s.standard_normal(3)
        a /= max(np.linalg.norm(a), 1.0)
        b = s.uniform() * s.standard_normal(3)
        b /= max(np.linalg.norm(b), 1.0)
        rho = np.kron(qubit_from_bloch(a), qubit_from_bloch(b))
        assert geometric_discord_closed(rho) <= 1e-12
        assert max_mutual_correlation(rho) <= 1e-12


def test_geometric_discord_zero_on_classical_states():
    assert geometric_discord_closed(rho_zero()) <= 1e-12
    for seed in range(25):
        assert geometric_discord_closed(random_cc_state(seed)) <= 1e-10
        assert geometric_discord_closed(random_cq_state(seed)) <= 1e-10


def test_geometric_discord_range():
    for seed in range(50):
        d = geometric_discord_closed(random_density_matrix(seed, rank=1 + seed % 4))
        assert 0.0 <= d <= 1.0


def test_bruteforce_matches_closed_form():
    # the two routes are independent: Pauli-spectrum formula vs direct
    # minimization of the measurement disturbance
    for seed in range(100):
        rho = random_density_matrix(seed, rank=1 + seed % 4)
        closed = geometric_discord_closed(rho)
        brute, theta, phi = geometric_discord_bruteforce(rho)
        assert abs(closed - brute) <= 1e-6
        assert brute >= closed - 1e-9
        # returned angles reproduce the reported minimum
        d = measurement_channel(rho, theta, phi) - rho
        assert_allclose(2.0 * (np.abs(d) ** 2).sum(), brute, atol=1e-12)


def test_bruteforce_accepts_smaller_grids():
    rho = random_density_matrix(3)
    brute, _, _ = geometric_discord_bruteforce(rho, grid=(46, 90))
    assert abs(brute - geometric_discord_closed(rho)) <= 1e-6


def test_discord_measures_invariant_under_local_unitaries(rng):
    for _ in range(15):
        rho = random_density_matrix(int(rng.integers(1 << 31)), rank=4)
        u = np.kron(random_unitary_2(rng), random_unitary_2(rng))
        rotated = u @ rho @ u.conj().T
        assert abs(
            geometric_discord_closed(rho) - geometric_discord_closed(rotated)
        ) <= 1e-9
        assert abs(
            max_mutual_correlation(rho) - max_mutual_correlation(rotated)
        ) <= 1e-9


def test_trace_distance_discord_zero_on_classical():
    for seed in range(5):
        rho = random_cc_state(seed)
        assert trace_distance_discord(rho, grid=(46, 90)) <= 1e-6


def test_trace_distance_discord_bell():
    # for Bell states the optimal measurement leaves distance 1 in trace norm
    assert_allclose(trace_distance_discord(bell_phi_plus(), grid=(46, 90)), 1.0, atol=1e-6)


def test_trace_distance_dominates_hs_on_bell_diagonal():
    for seed in range(25):
        rho = random_bell_diagonal(seed)
        d1 = trace_distance_discord(rho, grid=(46, 90))
        dg = geometric_discord_closed(rho)
        assert d1 >= np.sqrt(dg) - 1e-6


def test_max_mutual_correlation_rho_zero():
    assert_allclose(max_mutual_correlation(rho_zero()), 1.0, atol=1e-12)


def test_correlation_matrix_is_covariance_like():
    q = correlation_matrix(rho_zero())
    assert_allclose(np.abs(q), np.diag([1.0, 0.0, 0.0]), atol=1e-14)


def test_cm_cc_analytic_matches_measure():
    rng = np.random.default_rng(77)
    for _ in range(25):
        p = rng.dirichlet(np.ones(4)).reshape(2, 2)
        pair_a = (rng.uniform(0, np.pi / 2), rng.uniform(0, 2 * np.pi))
        pair_b = (rng.uniform(0, np.pi / 2), rng.uniform(0, 2 * np.pi))
        rho = cc_state(p, pair_a, pair_b)
        assert_allclose(max_mutual_correlation(rho), cm_cc_analytic(p), atol=1e-12)


def test_cm_cc_analytic_frozen_values():
    assert_allclose(cm_cc_analytic([[0.0, 0.5], [0.5, 0.0]]), 1.0, atol=0)
    assert_allclose(cm_cc_analytic([[0.5, 0.0], [0.0, 0.5]]), 1.0, atol=0)
    assert_allclose(cm_cc_analytic([[0.25, 0.25], [0.25, 0.25]]), 0.0, atol=0)


def test_cm_cq_analytic_matches_measure():
    rng = np.random.default_rng(78)
    for _ in range(25):
        p = rng.dirichlet(np.ones(2))
        pair = (rng.uniform(0, np.pi / 2), rng.uniform(0, 2 * np.pi))
        a1 = rng.uniform() * rng.standard_normal(3)
        a1 /= max(np.linalg.norm(a1), 1.0)
        a2 = rng.uniform() * rng.standard_normal(3)
        a2 /= max(np.linalg.norm(a2), 1.0)
        rho = cq_state(p, pair, a1, a2)
        assert_allclose(
            max_mutual_correlation(rho), cm_cq_analytic(p, a1, a2), atol=1e-12
        )


def test_cm_cq_analytic_frozen_value():
    got = cm_cq_analytic([0.5, 0.5], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
    assert_allclose(got, np.sqrt(2) / 2, atol=1e-15)


def test_correlation_distance_known_values():
    assert_allclose(correlation_distance(bell_phi_plus()), 1.5, atol=1e-12)
    assert_allclose(correlation_distance(rho_zero()), 1.0, atol=1e-12)


def test_correlation_distance_dominates_cm():
    for seed in range(50):
        rho = random_density_matrix(seed, rank=1 + seed % 4)
        assert correlation_distance(rho) >= max_mutual_correlation(rho) - 1e-9


def test_negativity_bell_and_separable():
    assert_allclose(negativity(bell_phi_plus()), 1.0, atol=1e-12)
    assert negativity(rho_zero()) <= 1e-12
    for seed in range(20):
        assert negativity(random_cc_state(seed)) <= 1e-12
        assert negativity(random_cq_state(seed)) <= 1e-12


def test_pure_state_measures_coincide():
    # rank-1 states: maximal correlation, root discord, and negativity agree
    for seed in range(40):
        rho = random_density_matrix(seed, rank=1)
        n = negativity(rho)
        root_dg = np.sqrt(geometric_discord_closed(rho))
        cm = max_mutual_correlation(rho)
        assert abs(root_dg - n) <= 1e-9
        assert abs(cm - root_dg) <= 1e-9


def test_root_discord_dominates_negativity():
    for seed in range(500):
        rho = random_density_matrix(seed, rank=1 + seed % 4)
        assert np.sqrt(geometric_discord_closed(rho)) >= negativity(rho) - 1e-9
