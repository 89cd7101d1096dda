#!/usr/bin/env python3
"""Family of conversion-probability CDFs against their large-n limit.

Reads the fig4 CSV (column p, one F_n<dim> column per dimension, and the
F_limit column) and draws one curve per dimension plus the limit.

Usage: plot_limit.py INPUT_CSV OUTPUT_IMAGE
"""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from _csv_util import load_rows

REQUIRED = ["p", "F_limit"]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("input_csv")
    parser.add_argument("output_image")
    args = parser.parse_args(argv)

    header, rows = load_rows(args.input_csv, REQUIRED)
    curve_cols = [c for c in header if c.startswith("F_n")]
    if not rows or not curve_cols:
        print(f"{args.input_csv}: need data rows and at least one F_n column", file=sys.stderr)
        sys.exit(2)

    p = np.array([float(r["p"]) for r in rows])
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    for col in curve_cols:
        ax.plot(p, [float(r[col]) for r in rows], lw=1.2, label=f"n = {col[3:]}")
    ax.plot(p, [float(r["F_limit"]) for r in rows], "k--", lw=1.6, label="limit")
    ax.set_xlabel("conversion probability p")
    ax.set_ylabel("cumulative probability")
    ax.legend(frameon=False, loc="upper left")
    fig.tight_layout()
    fig.savefig(args.output_image, dpi=150)
    print(f"wrote {args.output_image}")


if __name__ == "__main__":
    main()
