"""Shape of a coefficient sequence: unimodality, mode, concavity, ratio monotonicity."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

__all__ = [
    "AnalysisReport",
    "RatioSequence",
    "analyze",
    "ratio_sequence",
    "mode_bounds_check",
    "small_case_mode_window",
]


@dataclass(frozen=True)
class AnalysisReport:
    unimodal: bool
    mode: int | None
    first_violation: tuple[int, tuple[int, int, int]] | None
    concavity_window: list[int] = field(default_factory=list)
    ratio_monotone: bool = True


@dataclass(frozen=True)
class RatioSequence:
    ratios: tuple[Fraction, ...]
    non_decreasing: bool


def _ascending_prefix_end(a: Sequence[int]) -> int:
    p = 0
    while p + 1 < len(a) and a[p] <= a[p + 1]:
        p += 1
    return p


def _descending_suffix_start(a: Sequence[int]) -> int:
    s = len(a) - 1
    while s > 0 and a[s - 1] >= a[s]:
        s -= 1
    return s


def _first_valley(a: Sequence[int]) -> tuple[int, tuple[int, int, int]] | None:
    # bottom index of the first strict descent that is later followed by a strict ascent
    descended = False
    for i in range(len(a) - 1):
        if a[i] > a[i + 1]:
            descended = True
        elif a[i] < a[i + 1] and descended:
            return i, (a[i - 1], a[i], a[i + 1])
    return None


def concavity_window(a: Sequence[int]) -> list[int]:
    return [l for l in range(len(a) - 2) if 2 * a[l + 1] > a[l] + a[l + 2]]


def ratio_sequence(coeffs: Sequence[int]) -> RatioSequence:
    """``r_k = d_k / C(n, k)`` as exact fractions plus a monotonicity verdict."""
    n = len(coeffs) - 1
    r = tuple(Fraction(d, comb(n, k)) for k, d in enumerate(coeffs))
    return RatioSequence(r, all(r[k] <= r[k + 1] for k in range(n)))


def analyze(coeffs: Sequence[int]) -> AnalysisReport:
    """Unimodality verdict with the largest admissible peak index as mode.

    A sequence is unimodal when some ``k`` has it non-decreasing before ``k``
    and non-increasing from ``k`` on; on plateaus the largest such ``k`` wins.
    """
    a = list(coeffs)
    if not a:
        raise ValueError("empty coefficient sequence")
    p = _ascending_prefix_end(a)
    s = _descending_suffix_start(a)
    unimodal = s <= p
    return AnalysisReport(
        unimodal=unimodal,
        mode=p if unimodal else None,
        first_violation=None if unimodal else _first_valley(a),
        concavity_window=concavity_window(a),
        ratio_monotone=ratio_sequence(a).non_decreasing,
    )


def mode_bounds_check(coeffs: Sequence[int], n: int | None = None) -> bool:
    """Unimodal with mode in ``[n/2, n/2 + log2(n) + 2]``, decided exactly.

    ``m <= n/2 + log2 n + 2`` is rewritten as ``2**(2m - n - 4) <= n**2``.
    """
    n = len(coeffs) - 1 if n is None else n
    rep = analyze(coeffs)
    if not rep.unimodal:
        return False
    m = rep.mode
    if 2 * m < n:
        return False
    x = 2 * m - n - 4
    return x <= 0 or (1 << x) <= n * n


def small_case_mode_window(n: int) -> tuple[int, int]:
    """Mode window ``{floor(n/2), floor((n+1)/2)}`` checked by ``batch --assert-mode-window``.

    Graphs with a universal vertex can miss it at even ``n``: the star
    ``K_{1,3}`` has mode 3.
    """
    return n // 2, (n + 1) // 2
