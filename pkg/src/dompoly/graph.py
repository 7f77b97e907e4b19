"""Immutable simple graphs with precomputed closed neighbourhoods.

Vertices are ``0..n-1``. Vertex sets are passed around as plain iterables of
indices at the public surface and as integer bitmasks (bit ``v`` set iff
``v`` is a member) internally. Python ints are unbounded, so masks work for
any ``n``; the compiled enumeration paths additionally require ``n <= 64``.
"""
from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "GraphError",
    "closed_neighborhood",
    "dominates",
    "is_dominating",
    "universal_vertex_count",
    "to_mask",
    "members",
]


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex index."""


def members(mask: int) -> Iterator[int]:
    """Yield the vertex indices set in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph on ``n`` vertices.

    ``closed[v]`` is the bitmask of ``{v} | neighbours(v)``.
    """

    __slots__ = ("n", "closed", "_full")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        closed = [1 << v for v in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            closed[u] |= 1 << v
            closed[v] |= 1 << u
        self.n = n
        self.closed = tuple(closed)
        self._full = (1 << n) - 1

    @classmethod
    def from_closed_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = list(masks)
        n = len(masks)
        for v, m in enumerate(masks):
            if not (m >> v) & 1:
                raise GraphError(f"closed neighbourhood of {v} must contain {v}")
            if m >> n:
                raise GraphError(f"closed neighbourhood of {v} has out-of-range bits")
            for u in members(m):
                if not (masks[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g.n = n
        g.closed = tuple(masks)
        g._full = (1 << n) - 1
        return g

    @property
    def full(self) -> int:
        """Mask of the whole vertex set."""
        return self._full

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(members(self.closed[v] & ~(1 << v)))

    def degree(self, v: int) -> int:
        return self.closed[v].bit_count() - 1

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for v in range(self.n)
            for u in members(self.closed[v] & ((1 << v) - 1))
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.closed == other.closed

    def __hash__(self) -> int:
        return hash(self.closed)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def to_mask(g: Graph, s: Iterable[int]) -> int:
    """Validate a vertex collection against ``g`` and return its bitmask."""
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def neighborhood_mask(g: Graph, mask: int) -> int:
    out = 0
    closed = g.closed
    while mask:
        low = mask & -mask
        out |= closed[low.bit_length() - 1]
        mask ^= low
    return out


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Union of the closed neighbourhoods of the vertices in ``s``."""
    return frozenset(members(neighborhood_mask(g, to_mask(g, s))))


def dominates(g: Graph, s: Iterable[int], t: Iterable[int]) -> bool:
    """True iff every vertex of ``t`` lies in the closed neighbourhood of ``s``."""
    t_mask = to_mask(g, t)
    return t_mask & ~neighborhood_mask(g, to_mask(g, s)) == 0


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    return neighborhood_mask(g, to_mask(g, s)) == g.full


def universal_vertex_count(g: Graph) -> int:
    full = g.full
    return sum(1 for m in g.closed if m == full)
