"""Pure-Python (numpy) fallback for the compiled kernels in ``_core.pyx``.

Same algorithms, same signatures, same outputs: vertices ``0..a-1`` with
``a = n // 2`` form the low half whose cover masks are tabulated once; the
high half is walked index by index and each high cover is matched against the
whole low table in one vectorised step.
"""
from __future__ import annotations

import numpy as np

from .rng import MASK64, SplitMix64


def split_point(n: int) -> int:
    return n // 2


def _full(n: int) -> np.uint64:
    return np.uint64((1 << n) - 1)


def _cover_table(closed: np.ndarray, base: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    cov = np.zeros(1 << m, dtype=np.uint64)
    pop = np.zeros(1 << m, dtype=np.uint8)
    for i in range(m):
        step = 1 << i
        cov[step:2 * step] = cov[:step] | closed[base + i]
        pop[step:2 * step] = pop[:step] + 1
    return cov, pop


def count_dominating(closed: np.ndarray, n: int, h_lo: int, h_hi: int) -> np.ndarray:
    counts = np.zeros(n + 1, dtype=np.uint64)
    if n == 0:
        counts[0] = 1
        return counts
    a = n // 2
    b = n - a
    full = _full(n)
    cov_l, pop_l = _cover_table(closed, 0, a)
    cov_h, pop_h = _cover_table(closed, a, b)
    union_l = np.bitwise_or.reduce(closed[:a]) if a else np.uint64(0)
    pop_l_hist = np.bincount(pop_l, minlength=a + 1).astype(np.uint64)
    for h in range(h_lo, min(h_hi, 1 << b)):
        need = full & ~cov_h[h]
        if need & ~union_l:
            continue
        ph = int(pop_h[h])
        if need == 0:
            counts[ph:ph + a + 1] += pop_l_hist
            continue
        hit = (cov_l & need) == need
        counts[ph:ph + a + 1] += np.bincount(pop_l[hit], minlength=a + 1).astype(np.uint64)
    return counts


def undominated_k(closed: np.ndarray, n: int, k: int) -> np.ndarray:
    if k < 0 or k > n:
        return np.zeros(0, dtype=np.uint64)
    a = n // 2
    b = n - a
    full = _full(n)
    cov_l, pop_l = _cover_table(closed, 0, a)
    cov_h, pop_h = _cover_table(closed, a, b)
    order = np.argsort(pop_l, kind="stable")
    bounds = np.searchsorted(pop_l[order], np.arange(a + 2))
    grouped = cov_l[order]
    parts = []
    for h in range(1 << b):
        need_pop = k - int(pop_h[h])
        if 0 <= need_pop <= a:
            block = grouped[bounds[need_pop]:bounds[need_pop + 1]]
            parts.append(full & ~(cov_h[h] | block))
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint64)


def sample_hits(closed_words: np.ndarray, n: int, k: int, samples: int, seed: int) -> int:
    closed = [0] * n
    for v in range(n):
        m = 0
        for w, word in enumerate(closed_words[v].tolist()):
            m |= int(word) << (64 * w)
        closed[v] = m
    full = (1 << n) - 1
    rng = SplitMix64(seed & MASK64)
    nxt = rng.next
    hits = 0
    for _ in range(samples):
        cov = 0
        need = k
        for i in range(n):
            if need == 0:
                break
            rem = n - i
            if need == rem:
                for j in range(i, n):
                    cov |= closed[j]
                break
            if (nxt() * rem) >> 64 < need:
                cov |= closed[i]
                need -= 1
        if cov == full:
            hits += 1
    return hits
