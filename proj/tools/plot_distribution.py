#!/usr/bin/env python3
"""Render `rankcorr distribution` JSON outputs as histogram + KDE overlays.

    rankcorr distribution --n 500 --coefficient spearman/additive/iq0 --out raw.json
    rankcorr distribution --n 500 --coefficient spearman/additive/iq0 --standardize --out std.json
    tools/plot_distribution.py raw.json std.json -o fig.png

Needs matplotlib, which the C++ build does not.
"""
import argparse
import json

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("inputs", nargs="+")
    ap.add_argument("-o", "--out", default="distribution.png")
    args = ap.parse_args()

    fig, ax = plt.subplots(figsize=(7, 4))
    for path in args.inputs:
        with open(path) as fh:
            doc = json.load(fh)
        edges, dens = doc["edges"], doc["densities"]
        widths = [b - a for a, b in zip(edges, edges[1:])]
        label = f'{doc["label"]} (mean {doc["mean"]:.3f})'
        ax.bar(edges[:-1], dens, width=widths, align="edge", alpha=0.35, label=label)
        ax.plot(doc["kde"]["x"], doc["kde"]["y"], lw=1.5)
    ax.axvline(0.0, color="k", lw=0.8, ls=":")
    ax.set_xlim(-1, 1)
    ax.set_xlabel("coefficient value")
    ax.set_ylabel("density")
    ax.set_title(f'{doc["coefficient"]}, n={doc["n"]}')
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)


if __name__ == "__main__":
    main()
