"""Command-line front end: configuration, seeding, dispatch, CSV/JSON output.

Subcommands map one-to-one onto the experiments; each run writes
``<experiment>.csv`` plus a ``manifest.json`` echoing the exact configuration
and master seed.  CSV bodies are byte-identical across reruns with the same
configuration and seed, regardless of ``--threads``.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .experiments import (
    arcsine_cdf,
    conversion_distribution_experiment,
    estimate_convertibility,
    fit_power_law,
    ks_distance,
    limit_distribution_experiment,
    occupation_time_experiment,
    persistence_probabilities,
    sup_distance,
)
from .sampling import DirichletParam, RngStream, sample_dirichlet

EXPERIMENTS = ("fig2", "fig3", "fig4", "persistence", "sample")

# Sub-experiments within one run are spaced this far apart in stream-index
# space; chunk indices never reach the next block.
STREAM_BLOCK = 2**32

_DEFAULT_N = {
    "fig2": [2**k for k in range(1, 11)],
    "fig3": [32],
    "fig4": [8, 64, 1024],
    "persistence": [],
    "sample": [3],
}
_DEFAULT_SAMPLES = {
    "fig2": 1_000_000,
    "fig3": 100_000,
    "fig4": 500_000,
    "persistence": 100_000,
    "sample": 1,
}


@dataclass(frozen=True)
class RunConfig:
    experiment: str
    n_list: tuple
    samples: int
    k_max: int
    alpha: float
    master_seed: int
    chunk_size: int
    threads: int
    output_dir: str
    fit_min_n: int


def _fmt(x) -> str:
    """17 significant digits: round-trip exact for doubles."""
    return format(float(x), ".17g")


def parse_args(argv) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="majmc",
        description="Monte Carlo experiments on majorization of random simplex points",
    )
    sub = parser.add_subparsers(dest="experiment", required=True)
    for name, doc in (
        ("fig2", "convertibility probability vs dimension, with power-law fit"),
        ("fig3", "occupation time of the sorted-difference bridge vs the arcsine law"),
        ("fig4", "distribution of the conversion probability vs its large-n limit"),
        ("persistence", "persistence of the integrated two-sided-exponential walk"),
        ("sample", "print one random simplex point"),
    ):
        p = sub.add_parser(name, help=doc)
        p.add_argument("--seed", type=int, default=1, help="master seed (unsigned 64-bit)")
        p.add_argument("--samples", type=int, default=None, help="Monte Carlo sample count")
        p.add_argument(
            "--n",
            type=int,
            action="append",
            default=None,
            help="dimension; repeat the flag for several values",
        )
        p.add_argument("--kmax", type=int, default=None, help="chain truncation length")
        p.add_argument("--alpha", type=float, default=1.0, help="Dirichlet concentration")
        p.add_argument("--chunk-size", type=int, default=4096, help="samples per RNG chunk")
        p.add_argument("--threads", type=int, default=1, help="worker threads (no effect on output)")
        p.add_argument("--out", type=str, default="out", help="output directory")
        if name == "fig2":
            p.add_argument(
                "--fit-min-n",
                type=int,
                default=16,
                help="smallest dimension included in the power-law fit",
            )

    a = parser.parse_args(argv)
    samples = a.samples if a.samples is not None else _DEFAULT_SAMPLES[a.experiment]
    n_list = tuple(a.n) if a.n else tuple(_DEFAULT_N[a.experiment])
    k_max = a.kmax if a.kmax is not None else (1000 if a.experiment == "persistence" else 10_000)

    if samples < 1:
        parser.error("--samples must be >= 1")
    if k_max < 1:
        parser.error("--kmax must be >= 1")
    if a.chunk_size < 1:
        parser.error("--chunk-size must be >= 1")
    if a.threads < 1:
        parser.error("--threads must be >= 1")
    if not (a.alpha > 0.0):
        parser.error("--alpha must be > 0")
    if not (0 <= a.seed < 2**64):
        parser.error("--seed must fit in an unsigned 64-bit integer")
    if a.experiment in ("fig2", "fig3", "fig4", "sample") and not n_list:
        parser.error("--n is required for this experiment")
    if any(n < 1 for n in n_list):
        parser.error("--n must be >= 1")
    if a.experiment in ("fig3", "sample") and len(n_list) != 1:
        parser.error("--n must be given exactly once for this experiment")
    if a.experiment == "fig4" and any(n < 2 for n in n_list):
        parser.error("--n must be >= 2 for fig4")

    return RunConfig(
        experiment=a.experiment,
        n_list=n_list,
        samples=samples,
        k_max=k_max,
        alpha=a.alpha,
        master_seed=a.seed,
        chunk_size=a.chunk_size,
        threads=a.threads,
        output_dir=a.out,
        fit_min_n=getattr(a, "fit_min_n", 16),
    )


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def _run_fig2(cfg: RunConfig):
    rows = []
    estimates = []
    for i, n in enumerate(cfg.n_list):
        est = estimate_convertibility(
            n,
            cfg.samples,
            RngStream(cfg.master_seed, i * STREAM_BLOCK),
            alpha=cfg.alpha,
            chunk_size=cfg.chunk_size,
            threads=cfg.threads,
        )
        estimates.append((n, est))
        rows.append([str(n), _fmt(est.value), _fmt(est.std_error), "", "", ""])

    fit_points = [(n, e.value, e.std_error) for n, e in estimates if n >= cfg.fit_min_n]
    if len(fit_points) < 3:
        raise ValueError("power-law fit needs at least 3 points with n >= --fit-min-n")
    fit = fit_power_law(fit_points)
    rows.append(["", "", "", _fmt(fit.amplitude_b), _fmt(fit.exponent_theta), _fmt(fit.sigma_theta)])

    header = ["n", "p_hat", "std_err", "fit_b", "fit_theta", "fit_sigma_theta"]
    manifest = {
        "estimates": [
            {"n": n, "p_hat": e.value, "std_err": e.std_error, "samples": e.samples}
            for n, e in estimates
        ],
        "fit": {
            "b": fit.amplitude_b,
            "theta": fit.exponent_theta,
            "sigma_theta": fit.sigma_theta,
            "fit_min_n": cfg.fit_min_n,
            "points_used": [n for n, _, _ in fit_points],
        },
    }
    return header, rows, manifest


def _run_fig3(cfg: RunConfig):
    n = cfg.n_list[0]
    cdf = occupation_time_experiment(
        n,
        cfg.samples,
        RngStream(cfg.master_seed, 0),
        alpha=cfg.alpha,
        chunk_size=cfg.chunk_size,
        threads=cfg.threads,
    )
    lattice = np.arange(n + 1) / n
    emp = cdf.evaluate(lattice)
    ref = arcsine_cdf(lattice)
    rows = [[_fmt(t), _fmt(e), _fmt(r)] for t, e, r in zip(lattice, emp, ref)]
    manifest = {
        "n": n,
        "samples": cfg.samples,
        "lattice_sup_vs_arcsine": float(np.abs(emp - ref).max()),
        "ks_both_limits_vs_arcsine": ks_distance(cdf, arcsine_cdf),
    }
    return ["t", "empirical_cdf", "arcsine_cdf"], rows, manifest


def _run_fig4(cfg: RunConfig):
    curves = []
    for i, n in enumerate(cfg.n_list):
        curves.append(
            conversion_distribution_experiment(
                n,
                cfg.samples,
                RngStream(cfg.master_seed, i * STREAM_BLOCK),
                alpha=cfg.alpha,
                chunk_size=cfg.chunk_size,
                threads=cfg.threads,
            )
        )
    limit = limit_distribution_experiment(
        cfg.samples,
        cfg.k_max,
        RngStream(cfg.master_seed, len(cfg.n_list) * STREAM_BLOCK),
        chunk_size=cfg.chunk_size,
        threads=cfg.threads,
    )

    grid = np.linspace(0.0, 1.0, 1001)
    cols = [cdf.evaluate(grid) for cdf in curves] + [limit.evaluate(grid)]
    rows = [
        [_fmt(p)] + [_fmt(col[j]) for col in cols] for j, p in enumerate(grid)
    ]
    header = ["p"] + [f"F_n{n}" for n in cfg.n_list] + ["F_limit"]
    manifest = {
        "samples": cfg.samples,
        "curves": [
            {"n": n, "atom_at_1": cdf.mass_at(1.0), "sup_vs_limit": sup_distance(cdf, limit)}
            for n, cdf in zip(cfg.n_list, curves)
        ],
        "limit": {
            "k_max": cfg.k_max,
            "atom_at_1": limit.mass_at(1.0),
            "truncation_note": (
                "infimum truncated at k_max; the atom at 1 is an upward-biased "
                "truncation artifact that shrinks as k_max grows"
            ),
        },
    }
    return header, rows, manifest


def _run_persistence(cfg: RunConfig):
    ests = persistence_probabilities(
        cfg.k_max,
        cfg.samples,
        RngStream(cfg.master_seed, 0),
        chunk_size=cfg.chunk_size,
        threads=cfg.threads,
    )
    rows = [[str(k + 1), _fmt(e.value), _fmt(e.std_error)] for k, e in enumerate(ests)]
    manifest = {
        "k_max": cfg.k_max,
        "samples": cfg.samples,
        "p_1": ests[0].value,
        "p_k_max": ests[-1].value,
    }
    return ["k", "p_k", "std_err"], rows, manifest


def _run_sample(cfg: RunConfig):
    n = cfg.n_list[0]
    point = sample_dirichlet(n, DirichletParam(cfg.alpha), RngStream(cfg.master_seed, 0))
    print(" ".join(_fmt(v) for v in point.values))
    rows = [[str(i + 1), _fmt(v)] for i, v in enumerate(point.values)]
    manifest = {"n": n, "alpha": cfg.alpha, "values": [float(v) for v in point.values]}
    return ["component", "value"], rows, manifest


_RUNNERS = {
    "fig2": _run_fig2,
    "fig3": _run_fig3,
    "fig4": _run_fig4,
    "persistence": _run_persistence,
    "sample": _run_sample,
}


def run(config: RunConfig) -> int:
    start = time.perf_counter()
    try:
        header, rows, outputs = _RUNNERS[config.experiment](config)
    except ValueError as exc:
        print(f"majmc: {exc}", file=sys.stderr)
        return 2

    manifest = {
        "experiment": config.experiment,
        "master_seed": config.master_seed,
        "config": dataclasses.asdict(config),
        "wall_time_s": time.perf_counter() - start,
        "outputs": outputs,
    }
    try:
        out = Path(config.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        _write_csv(out / f"{config.experiment}.csv", header, rows)
        with open(out / "manifest.json", "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        print(f"majmc: I/O error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> None:
    config = parse_args(sys.argv[1:] if argv is None else argv)
    sys.exit(run(config))


if __name__ == "__main__":
    main()
