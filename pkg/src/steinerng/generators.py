"""Graph families and the dominating-vertex classes used by the sum-one characterization."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph import (
    Graph,
    complement as _complement,
    complete as _complete,
    components,
    edge_connectivity,
    edge_set,
    is_connected,
    norm_edge,
)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return _complete(n)


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError("both parts of K_{a,b} need at least one vertex")
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, frozenset(norm_edge(i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return complete_bipartite(1, leaves)


def harary(n: int, d: int) -> Graph:
    """Harary graph ``H_{n,d}``.

    Vertices sit on a circle.  For even ``d`` each vertex is joined to the
    ``d/2`` nearest vertices on either side.  For odd ``d`` the ``d-1``
    graph is built first; with even ``n`` every vertex also gets its
    diametric opposite ``i + n/2``, with odd ``n`` the edges
    ``{i, i + (n+1)/2}`` for ``0 <= i <= (n-1)/2`` are added (so vertex 0
    ends up with degree ``d + 1``).
    """
    if not 2 <= d < n:
        raise ValueError(f"Harary graph needs 2 <= d < n, got n={n}, d={d}")
    edges = set()
    for i in range(n):
        for j in range(1, d // 2 + 1):
            edges.add(norm_edge(i, (i + j) % n))
    if d % 2:
        if n % 2 == 0:
            for i in range(n // 2):
                edges.add(norm_edge(i, i + n // 2))
        else:
            for i in range((n - 1) // 2 + 1):
                edges.add(norm_edge(i, (i + (n + 1) // 2) % n))
    return Graph(n, frozenset(edges))


def k2_bipartite_aug(n: int, aug: Iterable[Iterable[int]] = ()) -> Graph:
    """``K_{2,n-2}`` (parts ``{0,1}`` and ``2..n-1``) plus edges inside the big part."""
    if n < 5:
        raise ValueError("K_{2,n-2} augmentations are defined for n >= 5")
    extra = edge_set(aug)
    for u, v in extra:
        if u < 2 or v < 2 or u >= n or v >= n:
            raise ValueError(f"augmentation edge {(u, v)} must lie inside the (n-2)-part")
    return Graph(n, complete_bipartite(2, n - 2).edges | extra)


def k2_plus(n: int) -> Graph:
    return k2_bipartite_aug(n, [(2, 3)])


def k2_plusplus(n: int, adjacent: bool = False) -> Graph:
    """Two added edges: vertex-disjoint ``{2,3},{4,5}`` by default, or the path ``{2,3},{3,4}``."""
    if adjacent:
        return k2_bipartite_aug(n, [(2, 3), (3, 4)])
    if n < 6:
        raise ValueError("two disjoint edges inside the (n-2)-part need n >= 6")
    return k2_bipartite_aug(n, [(2, 3), (4, 5)])


def sharp_bipartite_trees(r: int) -> tuple[list[list[tuple[int, int]]], frozenset]:
    """``r`` edge-disjoint spanning trees of ``K_{2r,2r+1}`` and the ``2r`` edges they leave unused.

    Parts are ``a_i = i`` (``0 <= i < 2r``) and ``b_j = 2r + j`` (``0 <= j <= 2r``).
    Tree ``p`` is a double star on ``a_{2p}``, ``a_{2p+1}``: ``a_{2p}`` takes
    ``b_0..b_r``, ``a_{2p+1}`` takes ``b_r..b_{2r}``.  Every other A-vertex
    hangs off the tree by its first unused edge.  Each A-vertex ends with
    exactly one edge left over.
    """
    if r < 1:
        raise ValueError("r must be positive")
    a_count = 2 * r
    b = [a_count + j for j in range(2 * r + 1)]
    own = {a: (b[: r + 1] if a % 2 == 0 else b[r:]) for a in range(a_count)}
    spare = {a: [x for x in b if x not in own[a]] for a in range(a_count)}
    trees = []
    for p in range(r):
        tree = [(2 * p, x) for x in own[2 * p]] + [(2 * p + 1, x) for x in own[2 * p + 1]]
        for a in range(a_count):
            if a // 2 != p:
                tree.append((a, spare[a].pop(0)))
        trees.append(sorted(tree))
    assert all(len(s) == 1 for s in spare.values())
    leftover = edge_set((a, s[0]) for a, s in spare.items())
    return trees, leftover


def sharp_bipartite_pair(r: int) -> tuple[Graph, frozenset]:
    """``(G, M)`` with ``G = K_{2r,2r+1} - M`` the union of exactly ``r`` edge-disjoint spanning trees.

    Both ``G`` and its complement have spanning tree packing number ``r``,
    so the pair attains the sum and product maxima for ``k = n = 4r + 1``.
    """
    trees, leftover = sharp_bipartite_trees(r)
    return Graph(4 * r + 1, edge_set(e for t in trees for e in t)), leftover


# representatives of the dominating-vertex classes --------------------------

def class1_graph(n: int) -> Graph:
    """Vertex 0 dominating, ``n-1`` pendant on 0, the rest a clique."""
    if n < 5:
        raise ValueError("class graphs are defined for n >= 5")
    edges = set(combinations(range(n - 1), 2))
    edges.add((0, n - 1))
    return Graph(n, frozenset(edges))


def class2_graph(n: int) -> Graph:
    """Vertex 0 dominating, ``{n-2, n-1}`` a K_2 hanging on 0, the rest a clique."""
    if n < 5:
        raise ValueError("class graphs are defined for n >= 5")
    edges = set(combinations(range(n - 2), 2))
    edges |= {(0, n - 2), (0, n - 1), (n - 2, n - 1)}
    return Graph(n, frozenset(edges))


def class3_graph(n: int, tree_order: int | None = None) -> Graph:
    """Vertex 0 dominating; ``1..tree_order`` form a path, the remaining vertices a clique.

    The default path takes every other vertex (a fan).  The clique part
    must be empty or have at least three vertices to keep edge connectivity 2.
    """
    if n < 5:
        raise ValueError("class graphs are defined for n >= 5")
    t = n - 1 if tree_order is None else tree_order
    if not 2 <= t <= n - 1 or n - 1 - t in (1, 2):
        raise ValueError("tree_order must lie in 2..n-1 and leave 0 or at least 3 other vertices")
    edges = {(0, v) for v in range(1, n)}
    edges |= {(i, i + 1) for i in range(1, t)}
    edges |= set(combinations(range(t + 1, n), 2))
    return Graph(n, frozenset(edges))


def class4_graph(n: int, aug: Iterable[Iterable[int]] = ()) -> Graph:
    return k2_bipartite_aug(n, aug)


# class membership ------------------------------------------------------------

def dominating_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def tree_components_without(g: Graph, v: int) -> list[int]:
    """Orders of the components of ``G - v`` that are trees."""
    h_vertices = [x for x in range(g.n) if x != v]
    h = g.induced(h_vertices)
    out = []
    for comp in components(h):
        order = comp.bit_count()
        size = sum(1 for a, b in h.edges if comp >> a & 1)
        if size == order - 1:
            out.append(order)
    return out


@dataclass(frozen=True)
class Membership:
    member: bool
    vertex: int | None = None

    def __bool__(self):
        return self.member


def class_membership(g: Graph, class_id: int, k: int | None = None) -> Membership:
    """Membership in the four dominating-vertex / K_{2,n-2} classes (defined for n >= 5).

    1: a dominating vertex with a pendant neighbour (edge connectivity 1).
    2: edge connectivity 2, a dominating vertex ``u`` and an edge ``v1 v2``
       with ``N(v1) = {u, v2}`` and ``N(v2) = {u, v1}``.
    3: edge connectivity 2, a dominating vertex and some other vertex of
       degree 2 (its two neighbours are then adjacent).
    4: edge connectivity 2, non-adjacent ``v1, v2`` joined to every other
       vertex, and a vertex ``u1`` with ``N(u1) = {v1, v2}``.

    The distinguished vertex is the dominating vertex for 1-3 and ``u1``
    for class 4.  ``k`` is accepted for interface symmetry and unused.
    """
    if class_id not in (1, 2, 3, 4):
        raise ValueError("class_id must be 1, 2, 3 or 4")
    n = g.n
    if n < 5 or not is_connected(g):
        return Membership(False)
    lam = edge_connectivity(g)
    dom = dominating_vertices(g)
    adj = g.adj
    if class_id == 1:
        if lam != 1:
            return Membership(False)
        for v in dom:
            if any(g.degree(x) == 1 for x in g.neighbors(v)):
                return Membership(True, v)
        return Membership(False)
    if lam != 2:
        return Membership(False)
    if class_id == 2:
        for u in dom:
            for v1, v2 in g.edge_list:
                if u in (v1, v2):
                    continue
                if adj[v1] == (1 << u) | (1 << v2) and adj[v2] == (1 << u) | (1 << v1):
                    return Membership(True, u)
        return Membership(False)
    if class_id == 3:
        for v in dom:
            if any(g.degree(x) == 2 for x in range(n) if x != v):
                return Membership(True, v)
        return Membership(False)
    everyone = g.vertex_mask
    for u1 in range(n):
        if g.degree(u1) != 2:
            continue
        v1, v2 = g.neighbors(u1)
        if g.has_edge(v1, v2):
            continue
        others = everyone & ~((1 << v1) | (1 << v2))
        if adj[v1] == others and adj[v2] == others:
            return Membership(True, u1)
    return Membership(False)


# family specs -------------------------------------------------------------

_FAMILIES = {
    "complete": (complete, ("n",)),
    "empty": (empty, ("n",)),
    "complete_bipartite": (complete_bipartite, ("a", "b")),
    "cycle": (cycle, ("n",)),
    "path": (path, ("n",)),
    "star": (star, ("n",)),
    "harary": (harary, ("n", "d")),
    "k2_bipartite_aug": (k2_bipartite_aug, ("n",)),
    "k2_plus": (k2_plus, ("n",)),
    "k2_plusplus": (k2_plusplus, ("n",)),
    "sharp_bipartite": (lambda r: sharp_bipartite_pair(r)[0], ("r",)),
    "class1": (class1_graph, ("n",)),
    "class2": (class2_graph, ("n",)),
    "class3": (class3_graph, ("n",)),
    "class4": (class4_graph, ("n",)),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)
    aug: tuple[tuple[int, int], ...] = ()
    complement: bool = False

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``family=harary,n=8,d=4`` (the ``family=`` prefix is optional).

        Extra keys: ``aug=2-3;4-5`` (augmentation edges), ``adjacent=1``
        (K^{++} path variant), ``t=3`` (class-3 tree order), ``complement=1``.
        """
        fields = {}
        for i, part in enumerate(text.split(",")):
            part = part.strip()
            if not part:
                continue
            if "=" not in part and i == 0:
                fields["family"] = part
                continue
            if "=" not in part:
                raise ValueError(f"bad family field {part!r}; expected key=value")
            key, value = part.split("=", 1)
            fields[key.strip()] = value.strip()
        if "family" not in fields:
            raise ValueError("family spec needs family=<name>")
        family = fields.pop("family")
        if family not in _FAMILIES:
            raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}")
        aug = ()
        if "aug" in fields:
            raw = fields.pop("aug")
            aug = tuple(tuple(int(x) for x in pair.split("-")) for pair in raw.split(";") if pair)
        comp = fields.pop("complement", "0") not in ("0", "false", "no")
        params = {key: int(value) for key, value in fields.items()}
        return cls(family, params, aug, comp)

    def build(self) -> Graph:
        ctor, required = _FAMILIES[self.family]
        missing = [p for p in required if p not in self.params]
        if missing:
            raise ValueError(f"family {self.family} needs parameters {missing}")
        args = [self.params[p] for p in required]
        if self.family in ("k2_bipartite_aug", "class4"):
            g = ctor(*args, aug=self.aug)
        elif self.family == "k2_plusplus":
            g = ctor(*args, adjacent=bool(self.params.get("adjacent", 0)))
        elif self.family == "class3":
            g = ctor(*args, tree_order=self.params.get("t"))
        else:
            g = ctor(*args)
        return _complement(g) if self.complement else g
