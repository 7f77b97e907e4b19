"""Reading, writing and generating graphs.

graph6 follows the public format description shipped with nauty: a size
field (``n + 63`` for ``n <= 62``, ``~`` plus three 6-bit bytes up to 258047,
``~~`` plus six bytes beyond) followed by the upper triangle of the adjacency
matrix in column-major order (``x(0,1), x(0,2), x(1,2), x(0,3), ...``), packed
big-endian into 6-bit groups, zero padded, each offset by 63.
"""
from __future__ import annotations

import math
from collections import deque
from typing import Callable, Iterable, Iterator

from .graph import Graph, members, universal_vertex_count
from .rng import SplitMix64, probability_threshold

__all__ = [
    "ParseError",
    "parse_graph6",
    "write_graph6",
    "parse_edgelist",
    "write_edgelist",
    "iter_graph6",
    "generate",
    "FAMILIES",
    "join_universal",
    "construction_graph",
    "ConstructionError",
    "girth",
    "shortest_cycle",
    "required_degree",
]


class ParseError(ValueError):
    """Malformed graph input. ``offset`` is a byte offset, ``line`` 1-based."""

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


class ConstructionError(ValueError):
    pass


# --- graph6 -----------------------------------------------------------------

def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 record", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise ParseError("truncated graph6 size field", offset=len(data))
    n = 0
    for i in range(start, start + width):
        n = (n << 6) | (data[i] - 63)
    return n, start + width


def parse_graph6(record: str | bytes) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is skipped)."""
    data = record.encode("ascii", "replace") if isinstance(record, str) else bytes(record)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside the graph6 range 63..126", offset=i)
    n, pos = _decode_size(data)
    if n < 0 or (pos == 1 and n > 62):
        raise ParseError(f"invalid size byte {data[0]!r}", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"expected {nbytes} edge bytes, found {len(body)}", offset=len(data))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after graph6 record", offset=pos + nbytes)
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", offset=len(data) - 1)
    bits >>= pad
    edges = []
    pos_bit = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos_bit) & 1:
                edges.append((i, j))
            pos_bit -= 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    out = bytearray(head)
    acc = nacc = 0
    for j in range(1, n):
        row = g.closed[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return out.decode("ascii")


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | ParseError]]:
    """Yield ``(line_number, record, graph_or_error)`` for nonblank lines."""
    for lineno, raw in enumerate(lines, 1):
        rec = raw.strip()
        if not rec:
            continue
        try:
            yield lineno, rec, parse_graph6(rec)
        except ParseError as exc:
            yield lineno, rec, ParseError(str(exc), exc.offset, lineno)


# --- edge lists ---------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line.

    ``#`` starts a comment; a ``/`` is accepted as a line separator so that
    one-line forms like ``"n 3 / 0 1 / 1 2"`` work.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        for part in line.split("#", 1)[0].split("/"):
            if part.strip():
                rows.append((lineno, part.split()))
    if not rows or rows[0][1][0] != "n" or len(rows[0][1]) != 2:
        raise ParseError("edge list must start with 'n <count>'", line=rows[0][0] if rows else 1)
    try:
        n = int(rows[0][1][1])
    except ValueError:
        raise ParseError(f"bad vertex count {rows[0][1][1]!r}", line=rows[0][0]) from None
    if n < 0:
        raise ParseError("negative vertex count", line=rows[0][0])
    edges = set()
    for lineno, tok in rows[1:]:
        if len(tok) != 2:
            raise ParseError(f"expected 'u v', got {' '.join(tok)!r}", line=lineno)
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {' '.join(tok)!r}", line=lineno) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in ({u}, {v}) for n={n}", line=lineno)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def write_edgelist(g: Graph) -> str:
    return "".join([f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


# --- generators ----------------------------------------------------------------

def _complete(n: int) -> Graph:
    return Graph(n, [(u, v) for v in range(n) for u in range(v)])


def _path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _star(n: int) -> Graph:
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph(n, [(0, i) for i in range(1, n)])


def _empty(n: int) -> Graph:
    return Graph(n)


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p) driven by SplitMix64 (see :mod:`dompoly.rng`)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    threshold = probability_threshold(p)
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.next() < threshold]
    return Graph(n, edges)


def join_universal(base: Graph, count: int = 1) -> Graph:
    """Append ``count`` new vertices adjacent to everything (indices ``n..``)."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    n = base.n
    edges = list(base.edges())
    total = n + count
    for u in range(n, total):
        edges.extend((v, u) for v in range(u))
    return Graph(total, edges)


FAMILIES: dict[str, Callable[..., Graph]] = {
    "complete": _complete,
    "path": _path,
    "cycle": _cycle,
    "star": _star,
    "empty": _empty,
    "petersen": _petersen,
    "gnp": gnp,
    "join_universal": join_universal,
}


def generate(family: str, **params) -> Graph:
    """Build a named family member, e.g. ``generate("gnp", n=10, p=0.3, seed=7)``.

    ``join_universal`` takes ``base`` as a :class:`Graph` or a family name
    (with ``base_n`` for sized families) and ``count``.
    """
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if family == "join_universal":
        base = params.pop("base")
        if isinstance(base, str):
            base_params = {"n": params.pop("base_n")} if "base_n" in params else {}
            base = generate(base, **base_params)
        return join_universal(base, **params)
    if "n" in params and params["n"] < 0:
        raise ValueError("n must be nonnegative")
    return fn(**params)


# --- girth and the universal-vertex construction --------------------------------

def shortest_cycle(g: Graph) -> list[int] | None:
    """A shortest cycle as a vertex list, or ``None`` for forests."""
    adj = [list(members(m & ~(1 << v))) for v, m in enumerate(g.closed)]
    best: list[int] | None = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= len(best):
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < len(best):
                        left, right = [], []
                        a, b = u, w
                        while a != -1:
                            left.append(a)
                            a = parent[a]
                        while b != -1:
                            right.append(b)
                            b = parent[b]
                        cyc = left[::-1] + right[:-1]
                        if len(set(cyc)) == length:
                            best = cyc
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    cyc = shortest_cycle(g)
    return math.inf if cyc is None else len(cyc)


def required_degree(n: int) -> int:
    """Base degree ``2*floor(log2(4n)/2) + 2`` used by the universal-vertex construction."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2 * (((4 * n).bit_length() - 1) // 2) + 2


def construction_graph(base: Graph) -> Graph:
    """Regular girth->=5 base plus one universal vertex."""
    degrees = {base.degree(v) for v in range(base.n)}
    if len(degrees) > 1:
        lo = min(range(base.n), key=base.degree)
        hi = max(range(base.n), key=base.degree)
        raise ConstructionError(
            f"base is not regular: vertex {lo} has degree {base.degree(lo)}, "
            f"vertex {hi} has degree {base.degree(hi)}"
        )
    cyc = shortest_cycle(base)
    if cyc is not None and len(cyc) < 5:
        raise ConstructionError(f"base has girth {len(cyc)} < 5: cycle {cyc}")
    g = join_universal(base, 1)
    assert universal_vertex_count(g) >= 1
    return g
