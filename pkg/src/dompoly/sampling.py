"""Monte-Carlo estimates of ``r_k = d_k / C(n, k)`` for graphs too large to enumerate.

Each sample is a uniform k-subset drawn by selection sampling from a
SplitMix64 stream seeded with ``seed`` (see :mod:`dompoly.rng`). Intervals are
Clopper-Pearson (exact binomial), e.g. 0 hits in 10 samples at level 0.95
gives ``[0, 0.30850]`` and 10 of 10 gives ``[0.69150, 1]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal

import numpy as np
from scipy.stats import beta

from . import kernels
from .graph import Graph
from .rng import MASK64, derive_seed

__all__ = ["Estimate", "estimate_rk", "compare_coefficients", "clopper_pearson"]


@dataclass(frozen=True)
class Estimate:
    k: int
    samples: int
    hits: int
    point: Fraction
    ci_low: float
    ci_high: float
    seed: int
    level: float


def clopper_pearson(hits: int, samples: int, level: float = 0.95) -> tuple[float, float]:
    if not 0 < level < 1:
        raise ValueError(f"level must lie in (0, 1), got {level}")
    tail = (1 - level) / 2
    lo = 0.0 if hits == 0 else float(beta.ppf(tail, hits, samples - hits + 1))
    hi = 1.0 if hits == samples else float(beta.ppf(1 - tail, hits + 1, samples - hits))
    return lo, hi


def _closed_words(g: Graph) -> np.ndarray:
    words = max(1, (g.n + 63) // 64)
    out = np.zeros((g.n, words), dtype=np.uint64)
    for v, m in enumerate(g.closed):
        for w in range(words):
            out[v, w] = (m >> (64 * w)) & MASK64
    return out


def estimate_rk(
    g: Graph,
    k: int,
    samples: int,
    seed: int = 0,
    level: float = 0.95,
    *,
    backend: str | None = None,
) -> Estimate:
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} outside [1, {g.n}]")
    if samples < 1:
        raise ValueError("samples must be positive")
    core = kernels.get(backend)
    hits = int(core.sample_hits(_closed_words(g), g.n, k, samples, seed & MASK64))
    lo, hi = clopper_pearson(hits, samples, level)
    return Estimate(k, samples, hits, Fraction(hits, samples), lo, hi, seed, level)


def _coefficient_interval(g: Graph, k: int, budget: int, seed: int, level: float, backend):
    n = g.n
    if k == 0:
        exact = Fraction(1 if n == 0 else 0)
        return exact, exact
    if k == n:
        return Fraction(1), Fraction(1)
    est = estimate_rk(g, k, budget, seed, level, backend=backend)
    scale = comb(n, k)
    return Fraction(est.ci_low) * scale, Fraction(est.ci_high) * scale


def compare_coefficients(
    g: Graph,
    k: int,
    budget: int,
    seed: int = 0,
    level: float = 0.95,
    *,
    backend: str | None = None,
) -> Literal["greater", "less", "inconclusive"]:
    """Sign of ``d_k - d_{k+1}`` when the two scaled intervals are disjoint.

    ``budget`` samples go to each of the two coefficients, on independent
    substreams of ``seed``. Overlapping intervals give ``"inconclusive"``.
    """
    if not 0 <= k < g.n:
        raise ValueError(f"k={k} needs 0 <= k and k + 1 <= n={g.n}")
    lo_a, hi_a = _coefficient_interval(g, k, budget, derive_seed(seed, 0), level, backend)
    lo_b, hi_b = _coefficient_interval(g, k + 1, budget, derive_seed(seed, 1), level, backend)
    if lo_a > hi_b:
        return "greater"
    if hi_a < lo_b:
        return "less"
    return "inconclusive"
