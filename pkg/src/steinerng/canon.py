"""Canonical labelling for small graphs.

Individualization-refinement search: the vertex partition is refined to an
equitable one (colour refinement), and every non-discrete partition is split
by individualizing each vertex of its first non-singleton cell.  Each leaf
gives a labelling; the canonical one maximizes the graph6 adjacency code.
Twin vertices (same neighbourhood up to each other) are interchangeable, so
only one of them is individualized per cell.  No other automorphism pruning
is done, which is fine up to n = 10 or so.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, UnsupportedSizeError, encode_graph6

DEFAULT_CANON_CAP = 10


def _refine(adj, cells):
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            split = True
            for key in keys:
                out.append(tuple(v for v in cell if sig[v] == key))
        cells = out
        if not split:
            return cells


def _code(adj, order):
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | ((row >> order[i]) & 1)
    return code


def _canonical_order(adj, n):
    best_code = -1
    best_order = None

    def search(cells):
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        tried = []
        for v in target:
            if any(((adj[u] ^ adj[v]) & ~((1 << u) | (1 << v))) == 0 for u in tried):
                continue
            tried.append(v)
            rest = tuple(x for x in target if x != v)
            search(cells[:t] + [(v,), rest] + cells[t + 1:])

    search([tuple(range(n))])
    return best_order


def canonical_labeling(g: Graph, cap: int = DEFAULT_CANON_CAP) -> list[int]:
    """Permutation ``perm`` with ``perm[v]`` = canonical label of vertex ``v``."""
    if g.n > cap:
        raise UnsupportedSizeError(f"canonical form supports n <= {cap}, got {g.n}")
    order = _canonical_order(g.adj, g.n)
    perm = [0] * g.n
    for label, v in enumerate(order):
        perm[v] = label
    return perm


def canonical_form(g: Graph, cap: int = DEFAULT_CANON_CAP) -> tuple[Graph, str, list[int]]:
    """Return ``(canonical graph, canonical graph6 key, relabelling permutation)``."""
    perm = canonical_labeling(g, cap)
    h = g.relabel(perm)
    return h, encode_graph6(h), perm


@lru_cache(maxsize=200_000)
def _key_cached(g: Graph, cap: int) -> str:
    return canonical_form(g, cap)[1]


def canonical_key(g: Graph, cap: int = DEFAULT_CANON_CAP) -> str:
    return _key_cached(g, cap)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    cap = max(DEFAULT_CANON_CAP, g.n)
    return canonical_key(g, cap) == canonical_key(h, cap)
