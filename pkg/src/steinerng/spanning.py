"""Spanning tree packing.

``stp_number`` uses Edmonds' matroid partition algorithm: edges are inserted
one by one into ``t`` forests, each insertion following a shortest chain of
forest swaps.  ``t`` edge-disjoint spanning trees exist iff the forests end
up covering ``t(n-1)`` edges.

``nwt_partition_bound`` is the independent route: the minimum over all
vertex partitions of crossing edges per extra part.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .graph import Edge, Graph, UnsupportedSizeError, is_connected
from .packing import SteinerTree, TreePacking

DEFAULT_PARTITION_CAP = 10


@dataclass(frozen=True)
class Partition:
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(sorted((frozenset(b) for b in self.blocks), key=min))
        if not blocks or any(not b for b in blocks):
            raise ValueError("partition blocks must be non-empty")
        seen: set[int] = set()
        for b in blocks:
            if seen & b:
                raise ValueError("partition blocks overlap")
            seen |= b
        object.__setattr__(self, "blocks", blocks)

    def covers(self, n: int) -> bool:
        return set().union(*self.blocks) == set(range(n))

    def crossing(self, g: Graph) -> int:
        block_of = {v: i for i, b in enumerate(self.blocks) for v in b}
        return sum(1 for u, v in g.edges if block_of[u] != block_of[v])


def _forest_path(adj: dict[int, dict[int, int]], u: int, v: int) -> list[int] | None:
    """Edge ids on the forest path from ``u`` to ``v``; ``None`` if not connected."""
    if u == v:
        return []
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y, e in adj[x].items():
            if y not in parent:
                parent[y] = (x, e)
                if y == v:
                    path = []
                    while y != u:
                        x, e = parent[y]
                        path.append(e)
                        y = x
                    return path
                queue.append(y)
    return None


def forest_partition(g: Graph, t: int) -> list[list[Edge]]:
    """Split a maximum number of edges of ``g`` into ``t`` forests."""
    edges = g.edge_list
    owner: list[int | None] = [None] * len(edges)
    forests = [{v: {} for v in range(g.n)} for _ in range(t)]

    def insert(e, i):
        u, v = edges[e]
        forests[i][u][v] = e
        forests[i][v][u] = e
        owner[e] = i

    def remove(e):
        u, v = edges[e]
        i = owner[e]
        del forests[i][u][v]
        del forests[i][v][u]
        owner[e] = None

    for root in range(len(edges)):
        parent: dict[int, int | None] = {root: None}
        queue = deque([root])
        done = False
        while queue and not done:
            x = queue.popleft()
            u, v = edges[x]
            for i in range(t):
                if owner[x] == i:
                    continue
                cycle = _forest_path(forests[i], u, v)
                if cycle is None:
                    # x goes into forest i, every predecessor takes its successor's slot
                    cur, dest = x, i
                    while cur is not None:
                        prev = owner[cur]
                        if prev is not None:
                            remove(cur)
                        insert(cur, dest)
                        cur, dest = parent[cur], prev
                    done = True
                    break
                for f in cycle:
                    if f not in parent:
                        parent[f] = x
                        queue.append(f)
    out: list[list[Edge]] = [[] for _ in range(t)]
    for e, i in enumerate(owner):
        if i is not None:
            out[i].append(edges[e])
    return out


def spanning_tree_packing(g: Graph) -> TreePacking:
    """A maximum family of edge-disjoint spanning trees of ``g``."""
    terminals = tuple(range(g.n))
    if g.n <= 1 or not is_connected(g):
        return TreePacking(terminals, ())
    best: list[list[Edge]] = []
    t = 1
    while t * (g.n - 1) <= g.m:
        forests = forest_partition(g, t)
        if sum(len(f) for f in forests) < t * (g.n - 1):
            break
        best = forests
        t += 1
    return TreePacking(terminals, tuple(SteinerTree(tuple(f)) for f in best))


def stp_number(g: Graph) -> int:
    """Maximum number of edge-disjoint spanning trees (0 if disconnected or ``n <= 1``)."""
    return len(spanning_tree_packing(g))


def _partitions(n: int):
    """Restricted growth strings of length ``n`` together with their block counts."""
    labels = [0] * n

    def rec(i, blocks):
        if i == n:
            yield labels, blocks
            return
        for b in range(blocks + 1):
            labels[i] = b
            yield from rec(i + 1, blocks + (b == blocks))

    if n == 0:
        return
    labels[0] = 0
    yield from rec(1, 1)


def nwt_partition_bound(g: Graph, cap: int = DEFAULT_PARTITION_CAP,
                        with_partition: bool = False):
    """Minimum over partitions with at least two blocks of ``crossing // (blocks - 1)``.

    With ``with_partition`` a minimizing :class:`Partition` is returned too.
    """
    if g.n > cap:
        raise UnsupportedSizeError(f"partition enumeration supports n <= {cap}, got {g.n}")
    if g.n <= 1:
        return (0, None) if with_partition else 0
    edges = g.edge_list
    best = None
    best_labels = None
    for labels, blocks in _partitions(g.n):
        if blocks < 2:
            continue
        crossing = 0
        for u, v in edges:
            if labels[u] != labels[v]:
                crossing += 1
        value = crossing // (blocks - 1)
        if best is None or value < best:
            best = value
            best_labels = list(labels)
            if best == 0:
                break
    if not with_partition:
        return best
    groups: dict[int, set[int]] = {}
    for v, b in enumerate(best_labels):
        groups.setdefault(b, set()).add(v)
    return best, Partition(tuple(frozenset(b) for b in groups.values()))


def near_complete_stp_bound(n: int, m: int) -> int:
    """Spanning trees guaranteed in ``K_n`` minus any ``m`` edges, for ``m <= n // 3``."""
    if n < 2:
        raise ValueError("need n >= 2")
    if not 0 <= m <= n // 3:
        raise ValueError(f"m must lie in 0..{n // 3}, got {m}")
    return min(n - 2 * m - 1, floor(Fraction(n, 2) - Fraction(2 * m, n - 1)))
