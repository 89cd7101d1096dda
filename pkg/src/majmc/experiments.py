"""Monte Carlo experiments: convertibility decay, occupation time, limit laws.

Every experiment splits its sample budget into fixed-size chunks; chunk i is
computed entirely from the stream ``seed.substream(i)``, and per-chunk results
are merged in chunk order.  Output is therefore a pure function of the
configuration and the master seed, independent of the number of worker
threads.  Experiments drawing pairs use the same in-chunk draw layout (the
first vector's block, then the second's), so runs sharing a seed see exactly
the same sampled pairs; that is what makes the nesting and atom-mass
identities in the tests exact rather than statistical.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .majorization import BRIDGE_TOL, MAJORIZATION_TOL
from .sampling import RngStream, exponential_from_uniform

DEFAULT_CHUNK_SIZE = 4096

# Step-block width for experiments that walk a chain dimension.  Blocks are
# drawn at full width regardless of k_max so that runs sharing a seed see
# identical draws at every (path, step) position.
_STEP_BLOCK = 128


@dataclass(frozen=True)
class EstimateWithError:
    """A Monte Carlo point estimate with its standard error."""

    value: float
    std_error: float
    samples: int

    @classmethod
    def proportion(cls, successes: int, samples: int) -> "EstimateWithError":
        if samples < 1:
            raise ValueError("samples must be >= 1")
        p = successes / samples
        return cls(value=p, std_error=math.sqrt(p * (1.0 - p) / samples), samples=samples)


@dataclass(frozen=True)
class PowerLawFit:
    """Result of a log-log least-squares fit value ~ b * n^(-theta)."""

    amplitude_b: float
    exponent_theta: float
    sigma_theta: float


@dataclass(frozen=True)
class EmpiricalCdf:
    """Right-continuous empirical distribution function."""

    sorted_samples: np.ndarray

    def __post_init__(self):
        arr = np.array(self.sorted_samples, dtype=np.float64)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("need at least one sample")
        if not np.all(np.isfinite(arr)):
            raise ValueError("samples must be finite")
        if np.any(np.diff(arr) < 0.0):
            raise ValueError("samples must be sorted non-decreasing")
        arr.setflags(write=False)
        object.__setattr__(self, "sorted_samples", arr)

    @classmethod
    def from_samples(cls, values) -> "EmpiricalCdf":
        return cls(sorted_samples=np.sort(np.asarray(values, dtype=np.float64)))

    @property
    def size(self) -> int:
        return self.sorted_samples.size

    def evaluate(self, x):
        """P(X <= x)."""
        r = np.searchsorted(self.sorted_samples, x, side="right") / self.size
        return float(r) if np.ndim(x) == 0 else r

    def evaluate_left(self, x):
        """P(X < x), the left-hand limit."""
        r = np.searchsorted(self.sorted_samples, x, side="left") / self.size
        return float(r) if np.ndim(x) == 0 else r

    def mass_at(self, x) -> float:
        return self.evaluate(x) - self.evaluate_left(x)


def ks_distance(e: EmpiricalCdf, reference) -> float:
    """Sup over sample points of |F_hat(x+-) - reference(x)|, both limits."""
    pts = np.unique(e.sorted_samples)
    ref = np.asarray(reference(pts), dtype=np.float64)
    right = e.evaluate(pts)
    left = e.evaluate_left(pts)
    return float(max(np.abs(right - ref).max(), np.abs(left - ref).max()))


def sup_distance(e1: EmpiricalCdf, e2: EmpiricalCdf) -> float:
    """Two-sample sup |F1 - F2|, evaluated over the union of sample points."""
    pts = np.unique(np.concatenate([e1.sorted_samples, e2.sorted_samples]))
    return float(np.abs(e1.evaluate(pts) - e2.evaluate(pts)).max())


def arcsine_cdf(t):
    """(2/pi) * arcsin(sqrt(t)) on [0, 1]."""
    arr = np.asarray(t, dtype=np.float64)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("t must lie in [0, 1]")
    out = (2.0 / np.pi) * np.arcsin(np.sqrt(arr))
    return float(out) if np.ndim(t) == 0 else out


def fit_power_law(points) -> PowerLawFit:
    """Unweighted OLS of log(value) on log(n); slope -theta, intercept log b.

    ``points`` is a sequence of (n, value, std_error) triples; standard
    errors are carried for reporting but do not weight the fit.
    """
    pts = list(points)
    if len(pts) < 3:
        raise ValueError("need at least 3 points")
    ns = np.array([p[0] for p in pts], dtype=np.float64)
    vals = np.array([p[1] for p in pts], dtype=np.float64)
    if np.any(vals <= 0.0) or np.any(ns <= 0.0):
        raise ValueError("power-law fit requires positive n and values")
    x = np.log(ns)
    y = np.log(vals)
    xm = x.mean()
    sxx = float(((x - xm) ** 2).sum())
    slope = float(((x - xm) * (y - y.mean())).sum() / sxx)
    intercept = float(y.mean() - slope * xm)
    resid = y - (intercept + slope * x)
    s2 = float((resid**2).sum() / (len(pts) - 2))
    return PowerLawFit(
        amplitude_b=math.exp(intercept),
        exponent_theta=-slope,
        sigma_theta=math.sqrt(s2 / sxx),
    )


# ---------------------------------------------------------------------------
# chunked execution


def _chunk_sizes(samples: int, chunk_size: int) -> list[int]:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if chunk_size < 1:
        raise ValueError("chunk_size must be >= 1")
    full, rem = divmod(samples, chunk_size)
    return [chunk_size] * full + ([rem] if rem else [])


def _run_chunks(seed: RngStream, samples: int, chunk_size: int, threads: int, worker):
    tasks = [(i, c) for i, c in enumerate(_chunk_sizes(samples, chunk_size))]

    def run(task):
        i, count = task
        return worker(seed.substream(i).generator(), count)

    if threads <= 1:
        return [run(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(run, tasks))


def _normalized_pair(gen, count: int, n: int, alpha: float):
    """One chunk of sample pairs; first vector's block drawn before the second's."""
    if alpha == 1.0:
        x = exponential_from_uniform(gen.random((count, n)))
        y = exponential_from_uniform(gen.random((count, n)))
    else:
        x = gen.standard_gamma(alpha, size=(count, n))
        y = gen.standard_gamma(alpha, size=(count, n))
    x /= x.sum(axis=1, keepdims=True)
    y /= y.sum(axis=1, keepdims=True)
    return x, y


def _ascending_cumsums(x, y):
    # cumulative sums of the sorted components, smallest first; position j
    # holds the sum of the j smallest entries, i.e. the (n-j+1)-th suffix sum
    cx = np.cumsum(np.sort(x, axis=1), axis=1)
    cy = np.cumsum(np.sort(y, axis=1), axis=1)
    return cx, cy


# ---------------------------------------------------------------------------
# experiments


def estimate_convertibility(
    n: int,
    samples: int,
    seed: RngStream,
    *,
    alpha: float = 1.0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    threads: int = 1,
) -> EstimateWithError:
    """Fraction of independent random pairs (mu, mu') with mu majorized by mu'."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def worker(gen, count):
        cx, cy = _ascending_cumsums(*_normalized_pair(gen, count, n, alpha))
        return int(np.all(cx >= cy - MAJORIZATION_TOL, axis=1).sum())

    hits = sum(_run_chunks(seed, samples, chunk_size, threads, worker))
    return EstimateWithError.proportion(hits, samples)


def estimate_partial_majorization(
    n: int,
    k: int,
    samples: int,
    seed: RngStream,
    *,
    alpha: float = 1.0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    threads: int = 1,
) -> EstimateWithError:
    """Fraction of pairs meeting the k smallest-component suffix conditions.

    The event nests in k, and k = n is exactly the convertibility event; runs
    sharing a seed reproduce those identities exactly.
    """
    if not 1 <= k <= n:
        raise ValueError("k must satisfy 1 <= k <= n")

    def worker(gen, count):
        cx, cy = _ascending_cumsums(*_normalized_pair(gen, count, n, alpha))
        return int(np.all(cx[:, :k] >= cy[:, :k] - MAJORIZATION_TOL, axis=1).sum())

    hits = sum(_run_chunks(seed, samples, chunk_size, threads, worker))
    return EstimateWithError.proportion(hits, samples)


def occupation_time_experiment(
    n: int,
    samples: int,
    seed: RngStream,
    *,
    alpha: float = 1.0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    threads: int = 1,
) -> EmpiricalCdf:
    """Empirical CDF of the fraction of bridge steps spent at or above zero."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def worker(gen, count):
        x, y = _normalized_pair(gen, count, n, alpha)
        xd = np.sort(x, axis=1)[:, ::-1]
        yd = np.sort(y, axis=1)[:, ::-1]
        s = np.cumsum(yd - xd, axis=1)
        return (s >= -BRIDGE_TOL).sum(axis=1) / n

    parts = _run_chunks(seed, samples, chunk_size, threads, worker)
    return EmpiricalCdf.from_samples(np.concatenate(parts))


def conversion_distribution_experiment(
    n: int,
    samples: int,
    seed: RngStream,
    *,
    alpha: float = 1.0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    threads: int = 1,
) -> EmpiricalCdf:
    """Empirical CDF of the conversion probability over independent pairs.

    Majorized pairs contribute an atom at exactly 1.0, so the mass at 1
    coincides with the convertibility estimate for the same seed.
    """
    if n < 2:
        raise ValueError("n must be >= 2")

    def worker(gen, count):
        cx, cy = _ascending_cumsums(*_normalized_pair(gen, count, n, alpha))
        ratios = np.min(cx / cy, axis=1)
        ratios[np.all(cx >= cy - MAJORIZATION_TOL, axis=1)] = 1.0
        return ratios

    parts = _run_chunks(seed, samples, chunk_size, threads, worker)
    return EmpiricalCdf.from_samples(np.concatenate(parts))


def limit_distribution_experiment(
    samples: int,
    k_max: int,
    seed: RngStream,
    *,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    threads: int = 1,
) -> EmpiricalCdf:
    """Empirical CDF of the limiting conversion functional over chain pairs.

    Each sample is the infimum over k <= k_max of prefix-sum ratios of two
    independent unit-rate Poisson processes, clamped to [0, 1] for comparison
    with the finite-n distributions.  The infimum is evaluated in full up to
    k_max; truncation leaves an upward-biased atom at 1 whose mass shrinks
    as k_max grows (it equals the k_max-step persistence probability of the
    integrated difference walk).
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")

    def worker(gen, count):
        running = np.full(count, np.inf)
        v_tail = np.zeros(count)
        w_tail = np.zeros(count)
        num_tail = np.zeros(count)
        den_tail = np.zeros(count)
        for k0 in range(0, k_max, _STEP_BLOCK):
            b = min(_STEP_BLOCK, k_max - k0)
            xs = exponential_from_uniform(gen.random((count, _STEP_BLOCK)))[:, :b]
            ys = exponential_from_uniform(gen.random((count, _STEP_BLOCK)))[:, :b]
            v = v_tail[:, None] + np.cumsum(xs, axis=1)
            w = w_tail[:, None] + np.cumsum(ys, axis=1)
            num = num_tail[:, None] + np.cumsum(v, axis=1)
            den = den_tail[:, None] + np.cumsum(w, axis=1)
            with np.errstate(divide="ignore"):
                running = np.minimum(running, (num / den).min(axis=1))
            v_tail, w_tail = v[:, -1], w[:, -1]
            num_tail, den_tail = num[:, -1], den[:, -1]
        return np.minimum(running, 1.0)

    parts = _run_chunks(seed, samples, chunk_size, threads, worker)
    return EmpiricalCdf.from_samples(np.concatenate(parts))


def persistence_probabilities(
    k_max: int,
    samples: int,
    seed: RngStream,
    *,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    threads: int = 1,
) -> list[EstimateWithError]:
    """Persistence p_1..p_k_max of the integrated two-sided-exponential walk.

    Steps are differences of independent Exp(1) draws; their partial sums are
    integrated once more, and p_k is the fraction of paths whose integrated
    walk stays at or above zero through step k.  All p_k come from the same
    paths, so the sequence is non-increasing exactly.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")

    def worker(gen, count):
        counts = np.zeros(k_max, dtype=np.int64)
        alive = np.ones(count, dtype=bool)
        v_tail = np.zeros(count)
        i_tail = np.zeros(count)
        for k0 in range(0, k_max, _STEP_BLOCK):
            b = min(_STEP_BLOCK, k_max - k0)
            xa = exponential_from_uniform(gen.random((count, _STEP_BLOCK)))[:, :b]
            xb = exponential_from_uniform(gen.random((count, _STEP_BLOCK)))[:, :b]
            v = v_tail[:, None] + np.cumsum(xa - xb, axis=1)
            integrated = i_tail[:, None] + np.cumsum(v, axis=1)
            ge = integrated >= 0.0
            ge[:, 0] &= alive
            acc = np.logical_and.accumulate(ge, axis=1)
            counts[k0 : k0 + b] += acc.sum(axis=0)
            alive = acc[:, -1]
            v_tail, i_tail = v[:, -1], integrated[:, -1]
        return counts

    parts = _run_chunks(seed, samples, chunk_size, threads, worker)
    totals = np.sum(parts, axis=0)
    return [EstimateWithError.proportion(int(c), samples) for c in totals]
