"""Regenerate the three figure datasets as CSV (and PNG) files.

Figure 1: discord of the evolved rho_zero, two-sided vs one-sided.
Figure 2: discord created from cc states with shrinking projector
          angles theta = pi/4, pi/6, pi/8 (two-sided channel); smaller
          angles mean the classical axes sit closer to the decay
          pointer basis and creation gets weaker.
Figure 3: peak discord of the planar cq family as a function of the
          Bloch-vector opening angle alpha, with the peak time as a
          second series. For these rows the gamma0t CSV column carries
          alpha.

Equivalent to `discord-lab figure {1,2,3} --out ...`, plus plots.
"""

import pathlib
from collections import defaultdict

from discord_lab import figure_data, write_curves_csv

OUT = pathlib.Path(__file__).parent / "output"


def by_label(samples):
    grouped = defaultdict(lambda: ([], []))
    for s in samples:
        grouped[s.label][0].append(s.gamma0t)
        grouped[s.label][1].append(s.value)
    return grouped


def main():
    OUT.mkdir(exist_ok=True)
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        plt = None

    for which in (1, 2, 3):
        samples = figure_data(which)
        path = OUT / f"figure{which}.csv"
        write_curves_csv(path, samples)
        grouped = by_label(samples)
        counts = {label: len(xs) for label, (xs, _) in grouped.items()}
        print(f"figure {which}: {path} {counts}")

        if plt is None:
            continue
        fig, ax = plt.subplots(figsize=(6, 4))
        for label, (xs, ys) in grouped.items():
            ax.plot(xs, ys, label=label)
        ax.set_xlabel("alpha (rad)" if which == 3 else r"$\gamma_0 t$")
        ax.set_ylabel("peak value" if which == 3 else "geometric discord")
        ax.legend(fontsize=8)
        fig.tight_layout()
        fig.savefig(OUT / f"figure{which}.png", dpi=150)

    if plt is not None:
        print(f"plots written next to the CSVs in {OUT}")


if __name__ == "__main__":
    main()
