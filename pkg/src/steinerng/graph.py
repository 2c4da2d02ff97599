"""Simple undirected graphs on a dense vertex set ``0..n-1``.

Graphs are immutable values.  Every operation that "changes" a graph
returns a new one.  Adjacency is kept as integer bitmasks, which keeps the
exhaustive sweeps over small graphs reasonably fast in pure Python.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

MAX_GRAPH6_ORDER = 62

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised for malformed graph6 input.  ``offset`` is the bad byte position."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedSizeError(ValueError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def edge_set(pairs: Iterable[Iterable[int]]) -> frozenset[Edge]:
    """Normalize an iterable of vertex pairs into a frozen set of ``(u, v)``, ``u < v``."""
    out = set()
    for pair in pairs:
        u, v = pair
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        out.add(norm_edge(int(u), int(v)))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = edge_set(self.edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} outside vertex range 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, g6={encode_graph6(self)!r})" if self.n <= MAX_GRAPH6_ORDER \
            else f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in the fixed deterministic order used for edge indices."""
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, frozenset(norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in sorted order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), frozenset((index[u], index[v]) for u, v in self.edges
                                        if u in index and v in index))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edges(n: int, pairs: Iterable[Iterable[int]]) -> Graph:
    return Graph(n, edge_set(pairs))


# graph6 ------------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no trailing newline, no ``>>graph6<<`` header)."""
    if g.n > MAX_GRAPH6_ORDER:
        raise UnsupportedSizeError(f"graph6 encoding supports n <= {MAX_GRAPH6_ORDER}, got {g.n}")
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = (value << 1) | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphFormatError("empty graph6 string", 0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ord(ch)} outside [63,126]", i)
    n = ord(text[0]) - 63
    if n == 63:
        raise GraphFormatError(f"long-form header (n > {MAX_GRAPH6_ORDER}) not supported", 0)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(text) != expected:
        raise GraphFormatError(f"expected {expected} bytes for n={n}, got {len(text)}",
                               min(len(text), expected))
    edges = []
    pos = 0
    data = [ord(ch) - 63 for ch in text[1:]]
    for j in range(1, n):
        for i in range(j):
            if (data[pos // 6] >> (5 - pos % 6)) & 1:
                edges.append((i, j))
            pos += 1
    return Graph(n, frozenset(edges))


# basic operations --------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty(n: int) -> Graph:
    return Graph(n)


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in combinations(range(g.n), 2) if e not in g.edges))


def delete_edges(g: Graph, m: Iterable[Iterable[int]]) -> Graph:
    """Remove the pairs in ``m`` from ``g``; pairs that are not edges of ``g`` are ignored."""
    gone = edge_set(m)
    for u, v in gone:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"pair {(u, v)} is not a vertex pair of the graph")
    return Graph(g.n, g.edges - gone)


def add_edges(g: Graph, m: Iterable[Iterable[int]]) -> Graph:
    return Graph(g.n, g.edges | edge_set(m))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, frozenset(edges))


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest vertex."""
    adj = g.adj
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = reach(adj, 1 << v)
        seen |= comp
        comps.append(comp)
    return comps


def reach(adj: tuple[int, ...] | list[int], start: int, allowed: int = -1) -> int:
    """Vertices reachable from the vertex mask ``start`` inside ``allowed``."""
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return reach(g.adj, 1) == g.vertex_mask


def degree_stats(g: Graph) -> tuple[int, int, list[int]]:
    """``(min degree, max degree, degree sequence sorted descending)``."""
    if g.n < 1:
        raise ValueError("degree statistics need at least one vertex")
    degs = sorted(g.degrees(), reverse=True)
    return degs[-1], degs[0], degs


# edge connectivity -------------------------------------------------------

def local_edge_connectivity(g: Graph, u: int, v: int, limit: int | None = None) -> int:
    """Maximum number of edge-disjoint ``u``-``v`` paths (unit-capacity max flow).

    With ``limit`` the augmentation stops once that many paths are found.
    """
    if u == v:
        raise ValueError("local edge connectivity needs two distinct vertices")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range")
    nbrs = [g.neighbors(x) for x in range(g.n)]
    # flow[a][b] in {-1, 0, 1}; residual capacity of arc a->b is 1 - flow[a][b]
    flow = [dict.fromkeys(nbrs[x], 0) for x in range(g.n)]
    cap = g.degree(u) if limit is None else min(limit, g.degree(u))
    value = 0
    while value < cap:
        parent = {u: u}
        queue = deque([u])
        while queue and v not in parent:
            a = queue.popleft()
            fa = flow[a]
            for b in nbrs[a]:
                if b not in parent and fa[b] < 1:
                    parent[b] = a
                    queue.append(b)
        if v not in parent:
            break
        b = v
        while b != u:
            a = parent[b]
            flow[a][b] += 1
            flow[b][a] -= 1
            b = a
        value += 1
    return value


def edge_connectivity(g: Graph) -> int:
    """Classical edge connectivity; 0 for disconnected graphs and for ``n <= 1``."""
    if g.n <= 1 or not is_connected(g):
        return 0
    best = min(g.degrees())
    for v in range(1, g.n):
        best = min(best, local_edge_connectivity(g, 0, v, limit=best))
    return best
