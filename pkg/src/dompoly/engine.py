"""Exact enumeration: coefficients d_k, undominated-set tables E_k^T, and the
single-vertex / pair statistics D(T), D(S:T), D'(S).

The heavy lifting lives in :mod:`dompoly.kernels`. Work is split over the
membership patterns of the high half of the vertices; every chunk yields a
vector of per-size counts and the chunks are summed, so the result does not
depend on how many workers ran.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import kernels
from .graph import Graph, GraphError, members, to_mask

__all__ = [
    "CapacityError",
    "DEFAULT_LIMIT",
    "HARD_LIMIT",
    "EStatistics",
    "domination_polynomial",
    "e_statistics",
    "e_tables",
    "dominator_count",
    "split_count",
    "pair_count",
]

DEFAULT_LIMIT = 32
HARD_LIMIT = 64


class CapacityError(ValueError):
    """Graph too large for exhaustive enumeration."""


def _check_capacity(g: Graph, limit: int) -> None:
    if limit > HARD_LIMIT:
        raise CapacityError(f"enumeration limit {limit} exceeds the hard cap of {HARD_LIMIT}")
    if g.n > limit:
        raise CapacityError(
            f"n={g.n} exceeds the enumeration limit {limit}; "
            "use dompoly.sampling for estimates on larger graphs"
        )


def _closed_array(g: Graph) -> np.ndarray:
    return np.array(g.closed, dtype=np.uint64)


def default_workers() -> int:
    return os.cpu_count() or 1


def domination_polynomial(
    g: Graph,
    *,
    limit: int = DEFAULT_LIMIT,
    workers: int | None = 1,
    backend: str | None = None,
) -> tuple[int, ...]:
    """Coefficients ``(d_0, ..., d_n)``; ``d_k`` counts dominating k-subsets.

    ``workers=None`` uses every available CPU. ``d_0`` is 0 whenever ``n >= 1``.
    """
    _check_capacity(g, limit)
    core = kernels.get(backend)
    n = g.n
    closed = _closed_array(g)
    n_high = 1 << (n - core.split_point(n)) if n else 1
    workers = default_workers() if workers is None else max(1, workers)
    if workers == 1 or n_high < 2 * workers:
        total = core.count_dominating(closed, n, 0, n_high)
    else:
        chunks = min(n_high, 8 * workers)
        edges = [n_high * i // chunks for i in range(chunks + 1)]
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda i: core.count_dominating(closed, n, edges[i], edges[i + 1]),
                                  range(chunks)))
        total = np.sum(parts, axis=0, dtype=np.uint64)
    return tuple(int(x) for x in total)


@dataclass
class EStatistics:
    """``table[T]`` = number of k-subsets whose undominated vertex set is exactly ``T``.

    Keys are vertex bitmasks; zero counts are omitted.
    """

    k: int
    n: int
    table: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.table.values())

    def dominating(self) -> int:
        return self.table.get(0, 0)

    def as_sets(self) -> dict[frozenset[int], int]:
        return {frozenset(members(t)): c for t, c in self.table.items()}


def e_statistics(g: Graph, k: int, *, limit: int = DEFAULT_LIMIT, backend: str | None = None) -> EStatistics:
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} outside [0, {g.n}]")
    _check_capacity(g, limit)
    core = kernels.get(backend)
    und = core.undominated_k(_closed_array(g), g.n, k)
    keys, counts = np.unique(und, return_counts=True)
    table = {int(t): int(c) for t, c in zip(keys.tolist(), counts.tolist())}
    return EStatistics(k, g.n, table)


def e_tables(g: Graph, *, limit: int = DEFAULT_LIMIT) -> list[EStatistics]:
    """``E_k`` tables for every ``k = 0..n`` in one pass.

    Small graphs are walked directly (each subset's cover derived from the
    subset minus its lowest vertex); larger ones go through the kernel per k.
    """
    _check_capacity(g, limit)
    n = g.n
    if n > 14:
        return [e_statistics(g, k, limit=limit) for k in range(n + 1)]
    full = g.full
    closed = g.closed
    size = 1 << n
    cov = [0] * size
    tables = [Counter() for _ in range(n + 1)]
    tables[0][full] = 1
    pop = [0] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        c = cov[rest] | closed[low.bit_length() - 1]
        cov[s] = c
        p = pop[rest] + 1
        pop[s] = p
        tables[p][full & ~c] += 1
    return [EStatistics(k, n, dict(t)) for k, t in enumerate(tables)]


# --- D(T), D(S:T), D'(S) on masks ------------------------------------------------

def dominator_count_mask(g: Graph, t: int) -> int:
    return sum(1 for m in g.closed if t & ~m == 0)


def split_count_mask(g: Graph, s: int, t: int) -> int:
    rest = s & ~t
    return sum(1 for m in g.closed if rest & ~m == 0 and m & t == 0)


def pair_count_mask(g: Graph, s: int) -> int:
    weak = [m for m in g.closed if s & ~m]
    return sum(1 for m1 in weak for m2 in weak if s & ~(m1 | m2) == 0)


def dominator_count(g: Graph, t: Iterable[int]) -> int:
    """D(T): vertices whose closed neighbourhood contains all of ``t``."""
    tm = to_mask(g, t)
    if not tm:
        raise GraphError("dominator_count needs a nonempty vertex set")
    return dominator_count_mask(g, tm)


def split_count(g: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """D(S:T): vertices dominating ``s - t`` while touching no vertex of ``t``.

    Requires ``t`` to be a nonempty proper subset of ``s``.
    """
    sm, tm = to_mask(g, s), to_mask(g, t)
    if not tm:
        raise GraphError("split_count needs a nonempty t")
    if tm & ~sm:
        raise GraphError("split_count needs t to be a subset of s")
    if tm == sm:
        raise GraphError("split_count needs t to be a proper subset of s")
    return split_count_mask(g, sm, tm)


def pair_count(g: Graph, s: Iterable[int]) -> int:
    """D'(S) as a count of ordered pairs ``(u1, u2)``.

    Neither ``{u1}`` nor ``{u2}`` dominates ``s`` but ``{u1, u2}`` does.
    """
    sm = to_mask(g, s)
    if not sm:
        raise GraphError("pair_count needs a nonempty vertex set")
    return pair_count_mask(g, sm)
