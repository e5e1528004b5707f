"""Tour of the state constructors and correlation measures.

Builds a handful of two-qubit states (Bell, the x-correlated mixture
rho_zero, random classically correlated and classical-quantum states)
and prints every measure the package computes for them, side by side
with the brute-force geometric discord so you can see the closed form
and the direct minimization agree.
"""

import numpy as np

from discord_lab import (
    cc_state,
    cm_cc_analytic,
    correlation_distance,
    cq_state,
    geometric_discord_bruteforce,
    geometric_discord_closed,
    max_mutual_correlation,
    negativity,
    pauli_decomposition,
    random_cc_state,
    random_cq_state,
    random_density_matrix,
    rho_zero,
    trace_distance_discord,
)

BELL = np.zeros((4, 4), dtype=complex)
BELL[0, 0] = BELL[0, 3] = BELL[3, 0] = BELL[3, 3] = 0.5


def show(name, rho):
    closed = geometric_discord_closed(rho)
    brute, theta, phi = geometric_discord_bruteforce(rho, grid=(91, 180))
    print(f"{name}")
    print(f"  geometric discord (closed form)   {closed:.10f}")
    print(f"  geometric discord (brute force)   {brute:.10f}"
          f"   at theta={theta:.4f}, phi={phi:.4f}")
    print(f"  trace-distance discord            "
          f"{trace_distance_discord(rho, grid=(46, 90)):.10f}")
    print(f"  max mutual correlation C_M        {max_mutual_correlation(rho):.10f}")
    print(f"  correlation distance              {correlation_distance(rho):.10f}")
    print(f"  negativity                        {negativity(rho):.10f}")
    print()


def main():
    print("=== named states ===\n")
    show("Bell state (|ee> + |gg>)/sqrt(2): every measure maximal", BELL)
    show("rho_zero = (I - sigma_x (x) sigma_x)/4: correlated but classical",
         rho_zero())

    p = np.array([[0.1, 0.4], [0.3, 0.2]])
    rho_cc = cc_state(p, (np.pi / 3, 0.7), (np.pi / 5, 2.1))
    print(f"cc state with joint distribution {p.tolist()}:")
    print(f"  analytic C_M = |Cov| = {cm_cc_analytic(p):.10f}")
    show("  (measures below; discord is zero, correlations are not)", rho_cc)

    rho_cq = cq_state((0.6, 0.4), (np.pi / 4, 0.0),
                      np.array([0.8, 0.0, 0.0]), np.array([-0.3, 0.5, 0.1]))
    show("cq state: classical on A only, still zero A-side discord", rho_cq)

    print("=== random states ===\n")
    for rank in (1, 2, 4):
        show(f"random rank-{rank} state (seed 7)",
             random_density_matrix(7, rank=rank))
    show("random cc state (seed 11)", random_cc_state(11))
    show("random cq state (seed 13)", random_cq_state(13))

    # the Pauli picture behind the closed form
    dec = pauli_decomposition(rho_zero())
    print("Pauli decomposition of rho_zero: x =", dec.x, " y =", dec.y)
    print("correlation tensor T =")
    print(np.array_str(dec.t, precision=3, suppress_small=True))


if __name__ == "__main__":
    main()
