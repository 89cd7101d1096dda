#!/usr/bin/env python3
"""Occupation-time distribution of the bridge against the arcsine law.

Reads the fig3 CSV (columns t, empirical_cdf, arcsine_cdf) and draws the
empirical step CDF over the smooth arcsine reference.

Usage: plot_occupation.py INPUT_CSV OUTPUT_IMAGE
"""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from _csv_util import load_rows

REQUIRED = ["t", "empirical_cdf", "arcsine_cdf"]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("input_csv")
    parser.add_argument("output_image")
    args = parser.parse_args(argv)

    _, rows = load_rows(args.input_csv, REQUIRED)
    if not rows:
        print(f"{args.input_csv}: no data rows", file=sys.stderr)
        sys.exit(2)
    t = np.array([float(r["t"]) for r in rows])
    emp = np.array([float(r["empirical_cdf"]) for r in rows])
    ref = np.array([float(r["arcsine_cdf"]) for r in rows])

    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    ax.step(t, emp, where="post", label="empirical")
    grid = np.linspace(0.0, 1.0, 400)
    ax.plot(grid, (2.0 / np.pi) * np.arcsin(np.sqrt(grid)), "k--", lw=1, label="arcsine law")
    ax.plot(t, ref, "k.", ms=2)
    ax.set_xlabel("fraction of steps at or above the origin")
    ax.set_ylabel("cumulative probability")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(args.output_image, dpi=150)
    print(f"wrote {args.output_image}")


if __name__ == "__main__":
    main()
