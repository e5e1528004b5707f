"""Quantum discord generation in two qubits under spontaneous emission.

The package follows one storyline: classically correlated two-qubit states
acquire quantum discord when one or both qubits decay by spontaneous
emission. `states` builds the state families, `measures` quantifies
correlations and discord, `dynamics` provides closed-form propagators plus an
independent integrator, and `experiments` produces the analytic curves,
peak scans, and randomized sweeps.
"""

from .linalg import (
    hermitian_eigenvalues,
    hs_norm,
    largest_singular_value,
    partial_trace,
    partial_transpose_b,
    tensor_product,
    trace_norm,
)
from .states import (
    BASIS_LABELS,
    InvalidStateError,
    cc_state,
    cq_state,
    pauli_decomposition,
    projector_pair,
    qubit_from_bloch,
    random_bell_diagonal,
    random_cc_state,
    random_cq_state,
    random_density_matrix,
    read_state,
    rho_zero,
    validate_density_matrix,
    write_state,
)
from .measures import (
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
from .dynamics import (
    CHANNEL_KINDS,
    ONE_SIDED_A,
    ONE_SIDED_B,
    TWO_SIDED,
    EmissionChannel,
    asymptotic_state,
    integrate_lindblad,
    lindblad_rhs,
    propagate,
    propagate_one_sided_a,
    propagate_one_sided_a_uncorrected,
    propagate_one_sided_b,
    propagate_trajectory,
    propagate_two_sided,
)
from .experiments import (
    CurveSample,
    SweepRecord,
    curve_cm_rho0,
    curve_dg_cq,
    curve_dg_rho0,
    dmax_vs_alpha,
    figure_data,
    peak_dg_rho0,
    peak_dg_trajectory,
    sweep_classical_states,
    write_curves_csv,
    write_sweep_csv,
)

__version__ = "0.1.0"
