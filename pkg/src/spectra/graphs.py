"""Undirected simple graphs on labeled vertices.

Vertices are 0..n-1 and adjacency is stored as one bitmask per row, which
keeps traversal, enumeration and the automorphism search cheap at census
sizes.  The module also owns the graph6 codec and the exact integer graph
matrices (adjacency, degree, Laplacian, signless Laplacian) plus the
floating-point normalized Laplacian.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DisconnectedGraphError, Graph6Error, IsolatedVertexError

# Largest order encodable with the 1-byte or 4-byte graph6 size header.
# The 8-byte header form is not implemented.
GRAPH6_MAX_N = 258047

# Brute-force automorphism search is capped here; beyond this the worst case
# (vertex-transitive graphs) explodes factorially.
AUTOMORPHISM_MAX_N = 10

# Full labeled enumeration above this order is unreasonable (2^(n(n-1)/2)
# masks); n = 8 already means 2^28 graphs and is opt-in at the CLI layer.
ENUMERATION_MAX_N = 8


@lru_cache(maxsize=None)
def _pair_order(n: int) -> tuple[tuple[int, int], ...]:
    """Upper-triangle vertex pairs in graph6 bit order: (0,1), (0,2), (1,2),
    (0,3), ... i.e. column by column."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


def pair_count(n: int) -> int:
    """Number of vertex pairs, i.e. bits in an edge mask for order n."""
    return n * (n - 1) // 2


@dataclass(frozen=True)
class Graph:
    """Simple loopless undirected graph; ``rows[i]`` has bit j set iff ij is
    an edge."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph must have at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside 0..n-1")
            if row >> i & 1:
                raise ValueError(f"vertex {i} has a loop")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError("loops are not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return Graph(n, tuple(rows))

    @staticmethod
    def from_mask(n: int, mask: int) -> "Graph":
        """Graph whose edge set is the given bitmask over the pair order
        used by graph6 and by the census enumerator."""
        return Graph(n, tuple(_rows_from_mask(n, mask)))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def mask(self) -> int:
        m = 0
        for t, (i, j) in enumerate(_pair_order(self.n)):
            if self.rows[i] >> j & 1:
                m |= 1 << t
        return m

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)


# ---------------------------------------------------------------------------
# graph6 codec

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optionally prefixed with ``>>graph6<<``)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    try:
        raw = data.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 input is not ASCII") from exc
    if not raw:
        raise Graph6Error("empty graph6 input")
    for pos, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} at position {pos} outside graph6 range 63..126")

    if raw[0] == 126:
        if len(raw) >= 2 and raw[1] == 126:
            raise Graph6Error("graph6 long size header (n >= 258048) is not supported")
        if len(raw) < 4:
            raise Graph6Error("truncated graph6 size header")
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
    else:
        n = raw[0] - 63
        body = raw[1:]
    if n < 1:
        raise Graph6Error("graph of order 0 is not supported")

    nbits = pair_count(n)
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(body)}")

    rows = [0] * n
    pairs = _pair_order(n)
    t = 0
    for byte in body:
        value = byte - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = value >> shift & 1
            if t < nbits:
                if bit:
                    i, j = pairs[t]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bit in final data byte")
            t += 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding; inverse of :func:`parse_graph6`."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise Graph6Error(
            f"order {n} exceeds the supported graph6 size header (max {GRAPH6_MAX_N})")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]

    out = list(head)
    value = 0
    filled = 0
    for i, j in _pair_order(n):
        value = value << 1 | (g.rows[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(value + 63)
            value = 0
            filled = 0
    if filled:
        out.append((value << (6 - filled)) + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# traversal

def _rows_from_mask(n: int, mask: int) -> list[int]:
    rows = [0] * n
    pairs = _pair_order(n)
    while mask:
        low = mask & -mask
        i, j = pairs[low.bit_length() - 1]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        mask ^= low
    return rows


def _rows_connected(rows: Sequence[int], n: int) -> bool:
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= rows[low.bit_length() - 1]
            m ^= low
        frontier = reach & ~seen
        seen |= frontier
        if seen == full:
            return True
    return seen == full


def _rows_diameter(rows: Sequence[int], n: int) -> int:
    """Max eccentricity via per-vertex frontier BFS; raises on disconnected."""
    full = (1 << n) - 1
    diam = 0
    for src in range(n):
        seen = 1 << src
        frontier = seen
        dist = 0
        while seen != full:
            reach = 0
            m = frontier
            while m:
                low = m & -m
                reach |= rows[low.bit_length() - 1]
                m ^= low
            frontier = reach & ~seen
            if not frontier:
                raise DisconnectedGraphError("diameter is infinite on a disconnected graph")
            seen |= frontier
            dist += 1
        if dist > diam:
            diam = dist
    return diam


def is_connected(g: Graph) -> bool:
    return _rows_connected(g.rows, g.n)


def diameter(g: Graph) -> int:
    return _rows_diameter(g.rows, g.n)


# ---------------------------------------------------------------------------
# automorphisms

def _iter_automorphisms(rows: Sequence[int], n: int) -> Iterator[tuple[int, ...]]:
    """Backtracking over degree-compatible images with incremental adjacency
    consistency; yields every automorphism exactly once."""
    degs = [row.bit_count() for row in rows]
    candidates = [
        [w for w in range(n) if degs[w] == degs[v]] for v in range(n)
    ]
    image = [0] * n

    def extend(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(image)
            return
        rv = rows[v]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            rw = rows[w]
            for u in range(v):
                if (rv >> u & 1) != (rw >> image[u] & 1):
                    break
            else:
                image[v] = w
                yield from extend(v + 1, used | 1 << w)

    yield from extend(0, 0)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All adjacency-preserving permutations, identity included.

    Brute force with degree pruning; capped at n <= ``AUTOMORPHISM_MAX_N``.
    """
    if g.n > AUTOMORPHISM_MAX_N:
        raise ValueError(
            f"automorphism search is capped at n <= {AUTOMORPHISM_MAX_N}")
    return list(_iter_automorphisms(g.rows, g.n))


def all_nonidentity_involutions(g: Graph) -> bool:
    """True iff every nonidentity automorphism has order 2."""
    if g.n > AUTOMORPHISM_MAX_N:
        raise ValueError(
            f"automorphism search is capped at n <= {AUTOMORPHISM_MAX_N}")
    return _rows_all_involutions(g.rows, g.n)


def _rows_all_involutions(rows: Sequence[int], n: int) -> bool:
    identity = tuple(range(n))
    for pi in _iter_automorphisms(rows, n):
        if pi == identity:
            continue
        for i, im in enumerate(pi):
            if pi[im] != i:
                return False
    return True


# ---------------------------------------------------------------------------
# graph matrices

MATRIX_KINDS = ("adjacency", "laplacian", "signless", "degree")


def build_matrix(g: Graph, kind: str) -> list[list[int]]:
    """Exact integer matrix of the requested kind.

    adjacency: 1 at edges; degree: diagonal of degrees; laplacian:
    degree - adjacency; signless: degree + adjacency.
    """
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {MATRIX_KINDS}")
    n = g.n
    degs = g.degrees()
    out = []
    for i in range(n):
        row = [0] * n
        if kind != "adjacency":
            row[i] = degs[i]
        if kind != "degree":
            bits = g.rows[i]
            sign = -1 if kind == "laplacian" else 1
            while bits:
                low = bits & -bits
                row[low.bit_length() - 1] = sign
                bits ^= low
        out.append(row)
    return out


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Symmetric normalized Laplacian: 1 on the diagonal, -1/sqrt(d_i d_j)
    at edges.  Requires every degree to be positive."""
    degs = g.degrees()
    if any(d == 0 for d in degs):
        raise IsolatedVertexError("normalized Laplacian is undefined with an isolated vertex")
    n = g.n
    inv_sqrt = [1.0 / np.sqrt(float(d)) for d in degs]
    out = np.zeros((n, n))
    for i in range(n):
        out[i, i] = 1.0
        bits = g.rows[i]
        while bits:
            low = bits & -bits
            j = low.bit_length() - 1
            out[i, j] = -inv_sqrt[i] * inv_sqrt[j]
            bits ^= low
    return out


# ---------------------------------------------------------------------------
# enumeration

def enumerate_labeled_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices exactly once, in ascending
    edge-mask order.  With ``connected_only`` the disconnected ones are
    dropped (the mask order of the survivors is unchanged)."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise ValueError(
            f"labeled enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}")
    for mask in range(1 << pair_count(n)):
        rows = _rows_from_mask(n, mask)
        if connected_only and not _rows_connected(rows, n):
            continue
        yield Graph(n, tuple(rows))
