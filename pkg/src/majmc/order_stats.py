"""Order statistics of iid samples and the limiting extreme-value chains.

For iid variables with distribution function F and density f, the decreasing
rearrangement X_1 >= X_2 >= ... >= X_n has closed-form marginal and joint
densities and forms an inhomogeneous Markov chain in both directions.  These
exact formulas are the oracle layer for the statistical tests: simulated
extremes of simplex points are checked against them and against the two
limiting chains obtained by rescaling,

  * the smallest components converge to the points of a unit-rate Poisson
    process (cumulative sums of Exp(1) spacings), and
  * the largest components converge to the negated logarithm of such a
    process, a strictly decreasing chain with Gumbel marginals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .errors import ZeroDenominatorError
from .sampling import sample_exponentials


@dataclass(frozen=True)
class BaseDistribution:
    """Distribution function and density of the underlying iid variables."""

    cdf: Callable
    pdf: Callable


def _exp_cdf(x):
    x = np.asarray(x, dtype=np.float64)
    return np.where(x > 0.0, -np.expm1(-np.maximum(x, 0.0)), 0.0)


def _exp_pdf(x):
    x = np.asarray(x, dtype=np.float64)
    return np.where(x >= 0.0, np.exp(-np.maximum(x, 0.0)), 0.0)


def _unif_cdf(x):
    return np.clip(np.asarray(x, dtype=np.float64), 0.0, 1.0)


def _unif_pdf(x):
    x = np.asarray(x, dtype=np.float64)
    return np.where((x >= 0.0) & (x <= 1.0), 1.0, 0.0)


EXP1 = BaseDistribution(cdf=_exp_cdf, pdf=_exp_pdf)
UNIFORM01 = BaseDistribution(cdf=_unif_cdf, pdf=_unif_pdf)


@dataclass(frozen=True)
class ChainSample:
    """Realization of one of the two limiting extreme-value chains.

    kind "poisson": strictly increasing positive points (smallest-component
    limit).  kind "gumbel": strictly decreasing reals (largest-component
    limit, the negated log of a Poisson process).
    """

    kind: Literal["poisson", "gumbel"]
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.float64)
        if vals.ndim != 1 or vals.size < 1:
            raise ValueError("values must be a non-empty 1-d sequence")
        d = np.diff(vals)
        if self.kind == "poisson":
            if vals[0] <= 0.0 or np.any(d <= 0.0):
                raise ValueError("poisson chain must be strictly increasing and positive")
        elif self.kind == "gumbel":
            if np.any(d >= 0.0):
                raise ValueError("gumbel chain must be strictly decreasing")
        else:
            raise ValueError(f"unknown chain kind {self.kind!r}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def k(self) -> int:
        return self.values.size


def _log_binom_prefactor(n: int, k: int) -> float:
    # n! / (n-k)! via log-gamma, safe for n well beyond 170
    return math.lgamma(n + 1) - math.lgamma(n - k + 1)


def density_order_stat(n: int, k: int, d: BaseDistribution, x) -> float:
    """Density of the k-th largest of n iid variables at x.

    f(x) * F(x)^(n-k) * (1-F(x))^(k-1) * n! / ((n-k)! (k-1)!)
    """
    if not 1 <= k <= n:
        raise ValueError("k must satisfy 1 <= k <= n")
    logc = _log_binom_prefactor(n, k) - math.lgamma(k)
    F = np.asarray(d.cdf(x), dtype=np.float64)
    f = np.asarray(d.pdf(x), dtype=np.float64)
    val = math.exp(logc) * np.power(F, n - k) * f * np.power(1.0 - F, k - 1)
    return float(val) if np.ndim(val) == 0 else val


def joint_density_top(n: int, k: int, d: BaseDistribution, xs) -> float:
    """Joint density of the k largest of n iid variables.

    n!/(n-k)! * f(x_1)...f(x_k) * F(x_k)^(n-k) on x_1 >= ... >= x_k, else 0.
    """
    xs = np.asarray(xs, dtype=np.float64)
    if xs.size != k or not 1 <= k <= n:
        raise ValueError("need len(xs) = k with 1 <= k <= n")
    if np.any(np.diff(xs) > 0.0):
        return 0.0
    val = (
        math.exp(_log_binom_prefactor(n, k))
        * np.prod(d.pdf(xs))
        * float(np.power(d.cdf(xs[-1]), n - k))
    )
    return float(val)


def joint_density_bottom(n: int, k: int, d: BaseDistribution, xs) -> float:
    """Joint density of the k smallest of n iid variables, listed decreasing.

    n!/(n-k)! * (1-F(x_first))^(n-k) * f(x_first)...f(x_last) on a
    non-increasing argument, else 0.
    """
    xs = np.asarray(xs, dtype=np.float64)
    if xs.size != k or not 1 <= k <= n:
        raise ValueError("need len(xs) = k with 1 <= k <= n")
    if np.any(np.diff(xs) > 0.0):
        return 0.0
    val = (
        math.exp(_log_binom_prefactor(n, k))
        * np.prod(d.pdf(xs))
        * float(np.power(1.0 - d.cdf(xs[0]), n - k))
    )
    return float(val)


def transition_cdf_top(n: int, k: int, d: BaseDistribution, y, x) -> float:
    """Conditional CDF of the (k+1)-th largest given the k-th largest is x.

    (F(min(y, x)) / F(x))^(n-k); equals 1 for y >= x.
    """
    if not 1 <= k < n:
        raise ValueError("k must satisfy 1 <= k < n")
    Fx = float(d.cdf(x))
    if Fx <= 0.0:
        raise ZeroDenominatorError("transition undefined where F(x) = 0")
    Fy = float(d.cdf(min(y, x)))
    return (Fy / Fx) ** (n - k)


def transition_cdf_bottom(n: int, k: int, d: BaseDistribution, y, x) -> float:
    """Conditional CDF of the (k+1)-th smallest given the k-th smallest is x.

    1 - ((1 - F(max(y, x))) / (1 - F(x)))^(n-k); equals 0 for y <= x.
    """
    if not 1 <= k < n:
        raise ValueError("k must satisfy 1 <= k < n")
    Sx = 1.0 - float(d.cdf(x))
    if Sx <= 0.0:
        raise ZeroDenominatorError("transition undefined where F(x) = 1")
    Sy = 1.0 - float(d.cdf(max(y, x)))
    return 1.0 - (Sy / Sx) ** (n - k)


def poisson_chain_from_spacings(spacings) -> ChainSample:
    """Points of the process with the given positive spacings."""
    return ChainSample(kind="poisson", values=np.cumsum(np.asarray(spacings, dtype=np.float64)))


def gumbel_chain_from_spacings(spacings) -> ChainSample:
    """Negated log of the cumulative spacings; strictly decreasing."""
    cs = np.cumsum(np.asarray(spacings, dtype=np.float64))
    return ChainSample(kind="gumbel", values=-np.log(cs))


def sample_poisson_chain(k: int, rng) -> ChainSample:
    """First k points of a unit-rate Poisson process (Exp(1) spacings)."""
    return poisson_chain_from_spacings(sample_exponentials(k, rng))


def sample_gumbel_chain(k: int, rng) -> ChainSample:
    """First k values of the decreasing chain with Gumbel marginals."""
    return gumbel_chain_from_spacings(sample_exponentials(k, rng))


def joint_density_poisson(vs) -> float:
    """Joint density exp(-v_k) of the first k Poisson points on 0 <= v_1 <= ... <= v_k."""
    vs = np.asarray(vs, dtype=np.float64)
    if vs.size < 1:
        raise ValueError("need at least one point")
    if vs[0] < 0.0 or np.any(np.diff(vs) < 0.0):
        return 0.0
    return float(np.exp(-vs[-1]))


def joint_density_gumbel(ws) -> float:
    """Joint density exp(-w_1 - ... - w_k - e^(-w_k)) on w_1 >= ... >= w_k."""
    ws = np.asarray(ws, dtype=np.float64)
    if ws.size < 1:
        raise ValueError("need at least one point")
    if np.any(np.diff(ws) > 0.0):
        return 0.0
    with np.errstate(over="ignore"):
        # exp(-w_k) may overflow to inf for very negative w_k; the density
        # is then exactly 0
        return float(np.exp(-ws.sum() - np.exp(-ws[-1])))


@dataclass(frozen=True)
class MinComponentStats:
    """Closed-form law of the smallest component of a uniform simplex point."""

    density: Callable
    mean: float
    variance: float


def min_component_stats(n: int) -> MinComponentStats:
    """Density n^2 (1 - n x)^(n-1) on [0, 1/n], with mean and variance.

    mean = 1 / (n (n+1)),  variance = 1 / (n (n+1)^2 (n+2)).
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def density(x, _n=n):
        x = np.asarray(x, dtype=np.float64)
        inside = (x >= 0.0) & (x <= 1.0 / _n)
        base = np.where(inside, 1.0 - _n * x, 0.0)
        val = _n * _n * np.power(base, _n - 1) * inside
        return float(val) if np.ndim(val) == 0 else val

    mean = 1.0 / (n * (n + 1))
    variance = 1.0 / (n * (n + 1) ** 2 * (n + 2))
    return MinComponentStats(density=density, mean=mean, variance=variance)
