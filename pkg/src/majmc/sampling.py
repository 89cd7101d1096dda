"""Reproducible samplers for points on the probability simplex.

Random numbers come from keyed, splittable streams: a stream is addressed by
a ``(master_seed, stream_index)`` pair and always reproduces the same
sequence.  Distinct indices give statistically independent streams, which is
what lets the Monte Carlo experiments split work across threads without
changing their output.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .majorization import ProbVector

_UINT64_MAX = 2**64 - 1


@dataclass(frozen=True)
class RngStream:
    """Address of a reproducible random stream.

    The same pair always yields bit-identical draws; different pairs yield
    independent streams (counter-based Philox keyed by the pair).  A stream
    is consumed through ``generator()``; the returned generator is stateful
    and must not be shared across threads.
    """

    master_seed: int
    stream_index: int = 0

    def __post_init__(self):
        for name in ("master_seed", "stream_index"):
            v = getattr(self, name)
            if not (0 <= int(v) <= _UINT64_MAX):
                raise ValueError(f"{name} must fit in an unsigned 64-bit integer")

    def generator(self) -> np.random.Generator:
        key = np.array([self.master_seed, self.stream_index], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))

    def substream(self, offset: int) -> "RngStream":
        return RngStream(self.master_seed, (self.stream_index + offset) & _UINT64_MAX)


def as_generator(rng) -> np.random.Generator:
    """Accept either a stream address or a live generator."""
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, RngStream):
        return rng.generator()
    raise TypeError("rng must be an RngStream or numpy Generator")


def exponential_from_uniform(u):
    """Inverse transform x = -log(1 - u) mapping Uniform[0,1) to Exp(1)."""
    return -np.log1p(-np.asarray(u, dtype=np.float64))


def sample_exponentials(k: int, rng) -> np.ndarray:
    """k independent Exp(1) draws via the inverse transform."""
    if k < 1:
        raise ValueError("k must be >= 1")
    gen = as_generator(rng)
    return exponential_from_uniform(gen.random(k))


def sample_uniform_simplex(n: int, rng) -> ProbVector:
    """Uniform point on the unit simplex: normalized iid Exp(1) draws."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = sample_exponentials(n, rng)
    s = x.sum()
    if s <= 0.0:
        raise RuntimeError("degenerate all-zero exponential draw")
    return ProbVector(x / s)


@dataclass(frozen=True)
class DirichletParam:
    """Concentration of a symmetric Dirichlet distribution."""

    alpha: float

    def __post_init__(self):
        if not (self.alpha > 0.0 and np.isfinite(self.alpha)):
            raise ValueError("alpha must be a positive finite real")


def sample_dirichlet(n: int, p, rng) -> ProbVector:
    """Symmetric Dirichlet point: normalized iid Gamma(alpha, 1) draws.

    ``p`` may be a DirichletParam or a bare positive float.  alpha = 1
    reduces exactly (bit for bit) to ``sample_uniform_simplex``.  Very small
    alpha can underflow the gamma sampler to an all-zero draw, which raises.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha = p.alpha if isinstance(p, DirichletParam) else DirichletParam(float(p)).alpha
    if alpha == 1.0:
        return sample_uniform_simplex(n, rng)
    gen = as_generator(rng)
    g = gen.standard_gamma(alpha, size=n)
    s = g.sum()
    if s <= 0.0:
        raise RuntimeError("gamma draws underflowed to zero; alpha too small")
    return ProbVector(g / s)
