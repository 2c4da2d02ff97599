"""Exhaustive generation of graphs up to isomorphism.

Graphs of order n are produced by attaching a new vertex to every graph of
order n-1 in all possible ways, keeping one canonical representative per
class.  Only graphs with at most half of the possible edges are extended;
the rest are obtained as complements.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import canonical_key
from .graph import Graph, UnsupportedSizeError, complement, is_connected, parse_graph6

MAX_ENUMERATION_ORDER = 8

# OEIS A000088 / A001349, used by callers as a sanity check
GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def _sort_key(key: str) -> tuple[int, str]:
    return parse_graph6(key).m, key


@lru_cache(maxsize=None)
def graph_keys(n: int) -> tuple[str, ...]:
    """Canonical graph6 keys of all graphs of order ``n``, sorted by (size, key)."""
    if n > MAX_ENUMERATION_ORDER:
        raise UnsupportedSizeError(f"enumeration supports n <= {MAX_ENUMERATION_ORDER}, got {n}")
    if n < 0:
        raise ValueError("order must be non-negative")
    if n <= 1:
        return (canonical_key(Graph(n)),)
    half = n * (n - 1) // 4
    new = n - 1
    keys = set()
    for prev in graph_keys(n - 1):
        h = parse_graph6(prev)
        if h.m > half:
            continue
        base = set(h.edges)
        for sub in range(1 << new):
            extra = sub.bit_count()
            if h.m + extra > half:
                continue
            edges = base | {(v, new) for v in range(new) if sub >> v & 1}
            keys.add(canonical_key(Graph(n, frozenset(edges))))
    for key in list(keys):
        keys.add(canonical_key(complement(parse_graph6(key))))
    return tuple(sorted(keys, key=_sort_key))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative (in canonical labelling) per isomorphism class of order ``n``."""
    for key in graph_keys(n):
        g = parse_graph6(key)
        if connected_only and not is_connected(g):
            continue
        yield g


@lru_cache(maxsize=None)
def graph_keys_with_size(n: int, m: int) -> tuple[str, ...]:
    """Canonical keys of all graphs with ``n`` vertices and exactly ``m`` edges.

    Built by adding one edge at a time, so it reaches orders beyond the
    vertex-extension enumeration as long as ``m`` stays small.
    """
    if m < 0 or m > n * (n - 1) // 2:
        return ()
    cap = max(10, n)
    if m == 0:
        return (canonical_key(Graph(n), cap),)
    keys = set()
    for prev in graph_keys_with_size(n, m - 1):
        h = parse_graph6(prev)
        for e in combinations(range(n), 2):
            if e not in h.edges:
                keys.add(canonical_key(Graph(n, h.edges | {e}), cap))
    return tuple(sorted(keys))
