"""Random classical states through the two-sided channel.

Samples classically correlated (cc) and classical-quantum (cq) states,
evolves each one, and records the peak discord created along the way.
Almost every correlated sample picks up discord, which is the point of
the exercise. The interesting part is the tail: samples whose
measurement axis on A happens to lie close to the z axis stay nearly
classical no matter how correlated they are, because amplitude damping
preserves classicality in its own pointer basis. The script surfaces
the most extreme such sample so the effect is visible, not hidden in
a summary statistic.

Writes sweep CSVs into demos/output/. A full-size run is
`discord-lab sweep --family cc --n 1000 --seed 4000 --out sweep.csv`.
"""

import pathlib

import numpy as np

from discord_lab import (
    TWO_SIDED,
    pauli_decomposition,
    random_cc_state,
    random_cq_state,
    sweep_classical_states,
    write_sweep_csv,
)

OUT = pathlib.Path(__file__).parent / "output"
N = 300


def a_axis_z_alignment(rho):
    """|z component| of the A-side measurement axis (left SV of Q)."""
    dec = pauli_decomposition(rho)
    q = dec.t - np.outer(dec.x, dec.y)
    return abs(np.linalg.svd(q)[0][2, 0])


def main():
    OUT.mkdir(exist_ok=True)
    for family, base in (("cc", 4000), ("cq", 5000)):
        records, summary = sweep_classical_states(N, family, TWO_SIDED, base)
        path = OUT / f"sweep_{family}.csv"
        write_sweep_csv(path, records)
        print(f"{family}: {N} samples (seeds {base}..{base + N - 1}) -> {path}")
        print(f"  peak D_G min/median/max: {summary['peak_min']:.3e} / "
              f"{summary['peak_median']:.3e} / {summary['peak_max']:.3e}")
        print(f"  fraction of correlated samples with peak > 1e-8: "
              f"{summary['frac_created']:.4f}")

        # the worst creator relative to its initial correlation
        sampler = random_cc_state if family == "cc" else random_cq_state
        active = [r for r in records if r.cm0 > 1e-4]
        worst = min(active, key=lambda r: r.peak_dg / r.cm0**2)
        align = a_axis_z_alignment(sampler(worst.seed))
        print(f"  weakest creator: seed {worst.seed}, cm0 {worst.cm0:.3e}, "
              f"peak {worst.peak_dg:.3e}, A-axis |a_z| = {align:.5f}")
        print("  (|a_z| near 1 marks the pointer-basis-aligned tail)\n")


if __name__ == "__main__":
    main()
