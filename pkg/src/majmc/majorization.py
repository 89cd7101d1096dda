"""Majorization pre-order on probability vectors and the conversion functional.

A probability vector x is majorized by y (written x < y here) when every
prefix sum of the decreasing rearrangement of x is dominated by the matching
prefix sum of y.  Equivalently, by normalization, every suffix sum of x
dominates the matching suffix sum of y; all predicates below use the suffix
form because the smallest components are the numerically delicate ones.

The module also provides the maximal conversion probability

    min_k  (sum of the n-k+1 smallest of x) / (sum of the n-k+1 smallest of y),

the bridge-walk view of the majorization condition, and the limiting
infimum-of-prefix-ratios functional for a pair of increasing point processes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, ZeroDenominatorError

# Absolute per-comparison tolerance for partial-sum dominance.  Ties resolve
# toward "comparable"; see `majorizes`.
MAJORIZATION_TOL = 1e-12

# Normalization tolerance for probability vectors.
SUM_TOL = 1e-12

# A bridge must return to zero within this absolute tolerance.
BRIDGE_TOL = 1e-10


def _frozen_array(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError(f"{name} must be a non-empty 1-d sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class ProbVector:
    """A point on the unit simplex: non-negative entries summing to one."""

    values: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.values, "values")
        if np.any(arr < 0.0):
            raise ValueError("probability vector entries must be non-negative")
        if abs(arr.sum() - 1.0) > SUM_TOL:
            raise ValueError("probability vector entries must sum to 1 within 1e-12")
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class SortedProbVector:
    """Decreasing rearrangement of a ProbVector plus precomputed suffix sums.

    ``suffix_sums[k]`` (0-based index k) is the sum of ``values_desc[k:]``,
    accumulated from the smallest entry upward so that the tiny trailing
    components are not absorbed by the leading ones.
    """

    values_desc: np.ndarray
    suffix_sums: np.ndarray

    def __post_init__(self):
        vd = _frozen_array(self.values_desc, "values_desc")
        ss = _frozen_array(self.suffix_sums, "suffix_sums")
        if vd.size != ss.size:
            raise ValueError("values_desc and suffix_sums must have equal length")
        if np.any(np.diff(vd) > 0.0):
            raise ValueError("values_desc must be non-increasing")
        if abs(ss[0] - 1.0) > SUM_TOL:
            raise ValueError("total suffix sum must be 1 within 1e-12")
        tail = np.append(ss[1:], 0.0)
        if np.any(np.abs(ss - tail - vd) > SUM_TOL):
            raise ValueError("suffix sums inconsistent with sorted values")
        object.__setattr__(self, "values_desc", vd)
        object.__setattr__(self, "suffix_sums", ss)

    @property
    def n(self) -> int:
        return self.values_desc.size


def sort_desc(x: ProbVector) -> SortedProbVector:
    """Decreasing rearrangement with suffix sums accumulated smallest-first."""
    asc = np.sort(x.values)
    suffix = np.cumsum(asc)[::-1]
    return SortedProbVector(values_desc=asc[::-1], suffix_sums=suffix)


def _check_dims(x: SortedProbVector, y: SortedProbVector) -> None:
    if x.n != y.n:
        raise DimensionMismatchError(f"dimension mismatch: {x.n} != {y.n}")


def majorizes(x: SortedProbVector, y: SortedProbVector) -> bool:
    """True iff x is majorized by y (x < y).

    Checked in the suffix form: every suffix sum of x dominates the matching
    suffix sum of y, with absolute tolerance 1e-12 per comparison.
    """
    _check_dims(x, y)
    return bool(np.all(x.suffix_sums >= y.suffix_sums - MAJORIZATION_TOL))


def conversion_probability(x: SortedProbVector, y: SortedProbVector) -> float:
    """Maximal probability of converting a state with diagonal x into y.

    Equals ``min_k suffix_x[k] / suffix_y[k]``, which is 1 exactly when
    x < y (the full-sum ratio is 1, so the minimum never exceeds 1).
    """
    _check_dims(x, y)
    if np.any(y.suffix_sums <= 0.0):
        raise ZeroDenominatorError(
            "conversion probability requires strictly positive target components"
        )
    if majorizes(x, y):
        return 1.0
    return float(np.min(x.suffix_sums / y.suffix_sums))


@dataclass(frozen=True)
class BridgeWalk:
    """Partial sums S_1..S_n of sorted-component differences; S_n is 0."""

    partial_sums: np.ndarray

    def __post_init__(self):
        s = _frozen_array(self.partial_sums, "partial_sums")
        if abs(s[-1]) > BRIDGE_TOL:
            raise ValueError("bridge must return to 0 within 1e-10 at the final step")
        object.__setattr__(self, "partial_sums", s)

    @property
    def n(self) -> int:
        return self.partial_sums.size


def bridge_walk(x: SortedProbVector, y: SortedProbVector) -> BridgeWalk:
    """Random-bridge view of majorization: S_k = sum_{j<=k} (y_desc_j - x_desc_j).

    The walk stays at or above the origin (within tolerance) exactly when
    x is majorized by y.
    """
    _check_dims(x, y)
    return BridgeWalk(partial_sums=np.cumsum(y.values_desc - x.values_desc))


def time_above_origin(w: BridgeWalk) -> int:
    """Number of steps with S_k >= 0.

    Exact zeros count as above; floating-point zeros (notably the final
    bridge step) are snapped via the 1e-10 bridge tolerance.
    """
    return int(np.count_nonzero(w.partial_sums >= -BRIDGE_TOL))


def limit_conversion_probability(v, v_prime, k_max: int) -> float:
    """Infimum over k <= k_max of prefix-sum ratios of two point processes.

    ``v`` and ``v_prime`` are strictly increasing positive sequences (for
    example the points of a unit-rate Poisson process, or a ChainSample of
    that kind); the functional is

        min_{1<=k<=k_max}  (v_1 + ... + v_k) / (v'_1 + ... + v'_k).

    The raw infimum is returned; it can exceed 1 when the source process
    dominates, and truncation at k_max biases it upward (the infimum over
    all k is never larger).
    """
    vals = np.asarray(getattr(v, "values", v), dtype=np.float64)
    vals_p = np.asarray(getattr(v_prime, "values", v_prime), dtype=np.float64)
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if vals.size < k_max or vals_p.size < k_max:
        raise ValueError("k_max exceeds chain length")
    for name, a in (("v", vals), ("v_prime", vals_p)):
        if a[0] <= 0.0 or np.any(np.diff(a) <= 0.0):
            raise ValueError(f"{name} must be strictly positive and increasing")
    num = np.cumsum(vals[:k_max])
    den = np.cumsum(vals_p[:k_max])
    return float(np.min(num / den))
