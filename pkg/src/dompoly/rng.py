"""SplitMix64, the reproducible generator behind every seeded routine.

The algorithm is Steele, Lea and Flood's SplitMix64 as published by Vigna::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic modulo 2**64. Test vectors (seed 0): 0xE220A8397B1DCDAF,
0x6E789E6AA1B965F4, 0x06C45D188009454F.

Derived uses:

* ``uniform_below(x, m)`` maps a 64-bit draw ``x`` to ``floor(x * m / 2**64)``.
* G(n, p) draws one value per vertex pair ``(u, v)``, ``u < v``, in
  lexicographic order; the edge is present iff ``x < floor(p * 2**64)``
  (``p`` converted to an exact rational first, so ``p = 1`` keeps every edge).
* Uniform ``k``-subsets use selection sampling (Knuth's Algorithm S): scan
  ``i = 0..n-1``; with ``need`` vertices still to pick out of ``rem = n - i``,
  stop if ``need == 0``, take the rest if ``need == rem``, otherwise draw ``x``
  and take ``i`` iff ``uniform_below(x, rem) < need``.
"""
from __future__ import annotations

from fractions import Fraction

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    __next__ = next

    def __iter__(self):
        return self


def uniform_below(x: int, m: int) -> int:
    return (x * m) >> 64


def probability_threshold(p: float | Fraction) -> int:
    """``floor(p * 2**64)`` for ``0 <= p <= 1``, computed exactly."""
    q = Fraction(p)
    if not 0 <= q <= 1:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    return (q.numerator << 64) // q.denominator


def derive_seed(seed: int, index: int) -> int:
    """Seed for the ``index``-th independent substream of ``seed``."""
    return SplitMix64((seed + index * GOLDEN) & MASK64).next()


def sample_subset_mask(rng: SplitMix64, n: int, k: int) -> int:
    """Uniform ``k``-subset of ``range(n)`` as a bitmask (Algorithm S)."""
    mask = 0
    need = k
    for i in range(n):
        if need == 0:
            break
        rem = n - i
        if need == rem:
            mask |= ((1 << rem) - 1) << i
            break
        if (rng.next() * rem) >> 64 < need:
            mask |= 1 << i
            need -= 1
    return mask
