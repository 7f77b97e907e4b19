"""Exact checks of the counting identities and of the coefficient conditions.

Two kinds of checks live here:

* graph-level verifiers that evaluate both sides of an identity or inequality
  from exhaustively enumerated statistics (small graphs only);
* parameter-level evaluators of the conditions that force a coefficient
  sequence to decrease (``check_mode_condition``) or to be strictly concave
  (``check_concavity_condition``), plus the arithmetic chain behind the
  universal-vertex construction. These work at any ``n``: binomials only ever
  appear as ratios ``C(a, k) / C(n, k)``, which collapse to ``n - a`` small
  factors.

Everything is integer or :class:`fractions.Fraction` arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .engine import (
    CapacityError,
    EStatistics,
    dominator_count_mask,
    domination_polynomial,
    e_tables,
    pair_count_mask,
    split_count_mask,
)
from .graph import Graph, GraphError, neighborhood_mask, to_mask
from .graphio import required_degree

__all__ = [
    "IdentityReport",
    "ConditionVerdict",
    "ChainLink",
    "ConstructionReport",
    "verify_step_identity",
    "verify_e_recurrence",
    "verify_dprime_identity",
    "verify_concavity_bound",
    "binomial_ratio",
    "check_mode_condition",
    "check_concavity_condition",
    "mode_condition_params",
    "concavity_condition_params",
    "check_construction_bound",
    "construction_k_range",
]


@dataclass(frozen=True)
class IdentityReport:
    name: str
    params: dict
    lhs: Fraction | int
    rhs: Fraction | int
    holds: bool


# --- graph-level verifiers ------------------------------------------------------

def _stats(g: Graph, coeffs, tables, limit):
    if tables is None:
        tables = e_tables(g, limit=limit)
    if coeffs is None:
        coeffs = domination_polynomial(g, limit=limit)
    return coeffs, tables


def verify_step_identity(
    g: Graph,
    k: int,
    *,
    coeffs: Sequence[int] | None = None,
    tables: Sequence[EStatistics] | None = None,
    limit: int = 32,
) -> IdentityReport:
    """``(k+1)(d_{k+1} - d_k) == sum_{T != {}} E_k^T D(T) - (2k+1-n) d_k``."""
    n = g.n
    if not 0 <= k < n:
        raise ValueError(f"k={k} outside [0, {n - 1}]")
    d, tables = _stats(g, coeffs, tables, limit)
    lhs = (k + 1) * (d[k + 1] - d[k])
    total = sum(c * dominator_count_mask(g, t) for t, c in tables[k].table.items() if t)
    rhs = total - (2 * k + 1 - n) * d[k]
    return IdentityReport("step", {"k": k}, lhs, rhs, lhs == rhs)


def verify_e_recurrence(
    g: Graph,
    k: int,
    *,
    tables: Sequence[EStatistics] | None = None,
    limit: int = 10,
) -> list[IdentityReport]:
    """Per nonempty ``T`` keyed at size k or k+1::

        (k+1)(E_{k+1}^T - E_k^T) == sum_{S > T} E_k^S D(S:T) - (2k+1+|N(T)|-n) E_k^T
    """
    n = g.n
    if n > limit:
        raise CapacityError(f"n={n} exceeds the recurrence check limit {limit}")
    if not 0 <= k < n:
        raise ValueError(f"k={k} outside [0, {n - 1}]")
    if tables is None:
        tables = e_tables(g, limit=limit)
    ek, ek1 = tables[k].table, tables[k + 1].table
    reports = []
    for t in sorted((set(ek) | set(ek1)) - {0}):
        lhs = (k + 1) * (ek1.get(t, 0) - ek.get(t, 0))
        acc = 0
        for s, c in ek.items():
            if s != t and s & t == t:
                acc += c * split_count_mask(g, s, t)
        nt = neighborhood_mask(g, t).bit_count()
        rhs = acc - (2 * k + 1 + nt - n) * ek.get(t, 0)
        reports.append(IdentityReport("e-recurrence", {"k": k, "T": t}, lhs, rhs, lhs == rhs))
    return reports


def verify_dprime_identity(g: Graph, s: Iterable[int]) -> IdentityReport:
    """``sum_{{} != T < S} D(S:T) D(T) == D(S)|N(S)| - D(S)^2 + D'(S)``."""
    sm = to_mask(g, s)
    if not sm:
        raise GraphError("verify_dprime_identity needs a nonempty vertex set")
    return dprime_identity_mask(g, sm)


def dprime_identity_mask(g: Graph, sm: int) -> IdentityReport:
    lhs = 0
    t = (sm - 1) & sm
    while t:
        lhs += split_count_mask(g, sm, t) * dominator_count_mask(g, t)
        t = (t - 1) & sm
    ds = dominator_count_mask(g, sm)
    rhs = ds * neighborhood_mask(g, sm).bit_count() - ds * ds + pair_count_mask(g, sm)
    return IdentityReport("dprime", {"S": sm}, lhs, rhs, lhs == rhs)


def concavity_range_ok(n: int, k: int) -> bool:
    """``n/2 <= k <= n/2 + sqrt(n)/4``, i.e. ``x = 2k - n >= 0`` and ``4x^2 <= n``."""
    x = 2 * k - n
    return x >= 0 and 4 * x * x <= n


def verify_concavity_bound(
    g: Graph,
    k: int,
    *,
    coeffs: Sequence[int] | None = None,
    tables: Sequence[EStatistics] | None = None,
    limit: int = 32,
) -> IdentityReport:
    """``2d_{k+1} - d_k - d_{k+2} >= d_k/(k+1) - sum_{S != {}} E_k^S D'(S) / (k+1)^2``.

    Both sides are reported; ``holds`` is whatever the exact comparison says.
    """
    n = g.n
    if not concavity_range_ok(n, k):
        raise ValueError(f"k={k} outside [n/2, n/2 + sqrt(n)/4] for n={n}")
    if k + 2 > n:
        raise ValueError(f"k={k} needs k + 2 <= n={n}")
    d, tables = _stats(g, coeffs, tables, limit)
    lhs = Fraction(2 * d[k + 1] - d[k] - d[k + 2])
    weighted = sum(c * pair_count_mask(g, s) for s, c in tables[k].table.items() if s)
    rhs = Fraction(d[k], k + 1) - Fraction(weighted, (k + 1) ** 2)
    return IdentityReport("concavity-bound", {"k": k}, lhs, rhs, lhs >= rhs)


# --- parameter-level conditions ----------------------------------------------------

@dataclass(frozen=True)
class ConditionVerdict:
    """``lhs`` and ``rhs`` are normalised by ``C(n, k)``; ``holds`` iff ``lhs > rhs``."""

    holds: bool
    lhs: Fraction
    rhs: Fraction
    params: dict

    def absolute(self) -> tuple[Fraction, Fraction]:
        scale = comb(self.params["n"], self.params["k"])
        return self.lhs * scale, self.rhs * scale


def binomial_ratio(a: int, k: int, n: int) -> Fraction:
    """``C(a, k) / C(n, k)`` for ``a <= n`` as ``prod_{i < n-a} (n-k-i)/(n-i)``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if a > n:
        raise ValueError(f"need a <= n, got a={a}, n={n}")
    if a < k:
        return Fraction(0)
    num = den = 1
    for i in range(n - a):
        num *= n - k - i
        den *= n - i
    return Fraction(num, den)


def _lhs_ratio(n: int, k: int, dk_lower: int | None, dk_lower_ratio: Fraction | None) -> Fraction:
    if (dk_lower is None) == (dk_lower_ratio is None):
        raise ValueError("give exactly one of dk_lower and dk_lower_ratio")
    if dk_lower_ratio is not None:
        return Fraction(dk_lower_ratio)
    if dk_lower < 0:
        raise ValueError("dk_lower must be nonnegative")
    return Fraction(dk_lower, comb(n, k))


def _common_checks(n: int, h: int, k: int, alpha: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= h <= n:
        raise ValueError(f"h={h} outside [0, {n}]")
    if alpha < 1:
        raise ValueError(f"alpha must be a positive integer, got {alpha}")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0, {n}]")


def check_mode_condition(
    n: int,
    h: int,
    k: int,
    alpha: int,
    dk_lower: int | None = None,
    *,
    dk_lower_ratio: Fraction | None = None,
) -> ConditionVerdict:
    """Does ``d_k > (n^2 C(n-a-1, k) + a C(n-h, k)) / (2k+1-n)`` hold for the bound given?

    When it does, ``d_k >= d_{k+1} >= ...`` for any graph with ``h``
    universal vertices whose ``d_k`` is at least ``dk_lower``.
    """
    _common_checks(n, h, k, alpha)
    if 2 * k < n:
        raise ValueError(f"k={k} below n/2 for n={n}")
    lhs = _lhs_ratio(n, k, dk_lower, dk_lower_ratio)
    rhs = (n * n * binomial_ratio(n - alpha - 1, k, n) + alpha * binomial_ratio(n - h, k, n)) / (2 * k + 1 - n)
    return ConditionVerdict(lhs > rhs, lhs, rhs, {"n": n, "h": h, "k": k, "alpha": alpha})


def check_concavity_condition(
    n: int,
    h: int,
    k: int,
    alpha: int,
    dk_lower: int | None = None,
    *,
    dk_lower_ratio: Fraction | None = None,
) -> ConditionVerdict:
    """Does ``d_k > (n^3 C(n-a-1, k) + 2a^2 C(n-h, k)) / (k+1)`` hold?

    Valid for ``k`` in ``[n/2, n/2 + sqrt(n)/4]``.
    """
    _common_checks(n, h, k, alpha)
    if not concavity_range_ok(n, k):
        raise ValueError(f"k={k} outside [n/2, n/2 + sqrt(n)/4] for n={n}")
    lhs = _lhs_ratio(n, k, dk_lower, dk_lower_ratio)
    rhs = (n ** 3 * binomial_ratio(n - alpha - 1, k, n)
           + 2 * alpha * alpha * binomial_ratio(n - h, k, n)) / (k + 1)
    return ConditionVerdict(lhs > rhs, lhs, rhs, {"n": n, "h": h, "k": k, "alpha": alpha})


def floor_log2_power(n: int, e: int) -> int:
    """``floor(e * log2 n)`` by bit length."""
    return (n ** e).bit_length() - 1


def ceil_half_plus_log2(n: int) -> int:
    """Smallest integer ``m`` with ``m >= n/2 + log2 n`` (``2**(2m - n) >= n**2``)."""
    m = (n + 1) // 2
    while (2 * m - n < 0) or (1 << (2 * m - n)) < n * n:
        m += 1
    return m


def mode_condition_params(n: int) -> dict:
    """``k = ceil(n/2 + log2 n) + 1``, ``alpha = floor(2 log2 n)``, bound ``C(n-1, k-1)``."""
    k = ceil_half_plus_log2(n) + 1
    return {"k": k, "alpha": floor_log2_power(n, 2), "dk_lower_ratio": Fraction(k, n)}


def concavity_condition_params(n: int) -> dict:
    """``k = ceil(n/2)``, ``alpha = floor(3 log2 n)``, bound ``C(n-1, k-1)``."""
    k = (n + 1) // 2
    return {"k": k, "alpha": floor_log2_power(n, 3), "dk_lower_ratio": Fraction(k, n)}


# --- construction chain --------------------------------------------------------------

@dataclass(frozen=True)
class ChainLink:
    name: str
    k: int | None
    lhs: Fraction
    rhs: Fraction
    strict: bool
    holds: bool


@dataclass(frozen=True)
class ConstructionReport:
    n: int
    d: int
    ks: list[int]
    in_theorem_range: bool
    applicable: bool
    links: list[ChainLink] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.applicable and all(link.holds for link in self.links)

    def failing(self) -> list[ChainLink]:
        return [link for link in self.links if not link.holds]


def construction_k_range(n: int) -> list[int]:
    """Integers ``k`` with ``n/2 <= k <= n/2 + log2(n)/999``.

    ``(2k - n) * 999 / 2 <= log2 n`` is tested as ``2**(999 (2k - n)) <= n**2``.
    """
    ks = []
    k = (n + 1) // 2
    while (1 << (999 * (2 * k - n))) <= n * n:
        ks.append(k)
        k += 1
    return ks


def _link(name, k, lhs, rhs, strict=False):
    return ChainLink(name, k, lhs, rhs, strict, lhs > rhs if strict else lhs >= rhs)


def check_construction_bound(n: int) -> ConstructionReport:
    """Evaluate each inequality of the lower-bound chain for a girth-5 regular
    base of degree ``d = 2 floor(log2(4n)/2) + 2`` plus one universal vertex,
    for every integer ``k`` in ``[n/2, n/2 + log2(n)/999]``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    d = required_degree(n)
    ks = construction_k_range(n)
    applicable = d < n
    report_links: list[ChainLink] = []
    if applicable:
        report_links.append(_link(
            "tail-fraction", None,
            1 - Fraction(n - 2, 1 << (d - 1)), Fraction(1, 2)))
        report_links.append(_link(
            "power-vs-64n", None, Fraction(1, 1 << (d + 2)), Fraction(1, 64 * n)))
        for k in ks:
            base = Fraction(n - k - d - 1, n - d) ** (d + 1)
            report_links.append(_link(
                "binomial-ratio-vs-power", k, binomial_ratio(n - d - 1, k, n), base))
            report_links.append(_link(
                "power-vs-two-power", k, base, Fraction(1, 1 << (d + 2))))
            report_links.append(_link(
                "power-vs-64n-direct", k, base, Fraction(1, 64 * n)))
            report_links.append(_link(
                "final", k, Fraction(n - 1, 2) * (d + 1) / (64 * n), Fraction(2 * k + 1 - n), strict=True))
    return ConstructionReport(n, d, ks, n >= 1 << 20, applicable, report_links)
