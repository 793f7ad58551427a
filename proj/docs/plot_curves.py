#!/usr/bin/env python3
"""Plot fdrelay CSV outputs: analytic CDFs against simulated ECDFs.

Usage:
    fdrelay analytic --out run1
    fdrelay simulate --out run1
    python3 docs/plot_curves.py run1 run1_cdf.png
"""
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_csv(path):
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    header, data = rows[0], rows[1:]
    cols = {name: [float(r[i]) for r in data] for i, name in enumerate(header)}
    return cols


def main():
    prefix = sys.argv[1] if len(sys.argv) > 1 else "fdrelay_out"
    out = sys.argv[2] if len(sys.argv) > 2 else prefix + "_cdf.png"

    ana = read_csv(prefix + "_analytic.csv")
    fig, ax = plt.subplots(figsize=(7, 5))
    for col, label in [("cdf_dt", "DT"), ("cdf_isdf", "ISDF"), ("cdf_sdf", "SDF")]:
        ax.plot(ana["gamma_db"], ana[col], label=label + " (closed form)")

    for proto, marker in [("dt", "o"), ("isdf", "s"), ("sdf", "^")]:
        try:
            ecdf = read_csv(f"{prefix}_{proto}_ecdf.csv")
        except FileNotFoundError:
            continue
        ax.plot(ecdf["gamma_db"][::40], ecdf["ecdf"][::40], marker, ms=4, mfc="none",
                label=proto.upper() + " (simulated)")

    ax.set_xlabel("effective SNR (dB)")
    ax.set_ylabel("CDF")
    ax.set_xlim(-10, 30)
    ax.set_ylim(0, 1)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(out)


if __name__ == "__main__":
    main()
