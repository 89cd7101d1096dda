#!/usr/bin/env python3
"""Log-log plot of the convertibility probability vs dimension.

Reads the fig2 CSV (columns n, p_hat, std_err plus an embedded fit row
carrying fit_b, fit_theta, fit_sigma_theta) and overlays the fitted power
law b * n^(-theta) as a dotted line.

Usage: plot_decay.py INPUT_CSV OUTPUT_IMAGE
"""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from _csv_util import load_rows

REQUIRED = ["n", "p_hat", "std_err", "fit_b", "fit_theta", "fit_sigma_theta"]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("input_csv")
    parser.add_argument("output_image")
    args = parser.parse_args(argv)

    _, rows = load_rows(args.input_csv, REQUIRED)
    data = [(int(r["n"]), float(r["p_hat"]), float(r["std_err"])) for r in rows if r["n"]]
    fits = [r for r in rows if not r["n"] and r["fit_b"]]
    if not data:
        print(f"{args.input_csv}: no data rows", file=sys.stderr)
        sys.exit(2)

    ns = np.array([d[0] for d in data], dtype=float)
    ps = np.array([d[1] for d in data])
    errs = np.array([d[2] for d in data])

    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    ax.errorbar(ns, ps, yerr=errs, fmt="o", ms=4, capsize=2, label="Monte Carlo")
    if fits:
        b = float(fits[-1]["fit_b"])
        theta = float(fits[-1]["fit_theta"])
        sigma = float(fits[-1]["fit_sigma_theta"])
        grid = np.geomspace(ns.min(), ns.max(), 200)
        ax.plot(
            grid,
            b * grid**-theta,
            "k:",
            label=rf"fit $b\,n^{{-\theta}}$, $\theta$={theta:.4f}$\pm${sigma:.4f}",
        )
        print(f"fit overlay: b={b:.4f} theta={theta:.4f} sigma_theta={sigma:.4f}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("dimension n")
    ax.set_ylabel("convertibility probability")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(args.output_image, dpi=150)
    print(f"wrote {args.output_image}")


if __name__ == "__main__":
    main()
