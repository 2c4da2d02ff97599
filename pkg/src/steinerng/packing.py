"""Exact edge-disjoint Steiner tree packing.

``pack_trees`` decides whether ``t`` pairwise edge-disjoint trees connecting
a terminal set exist, and returns them if so.  The search works on edge
bitmasks and only ever builds *minimal* Steiner trees (every leaf is a
terminal): pruning non-terminal leaves keeps a packing edge-disjoint, so no
packing is lost.

A tree is grown from the root terminal ``s0`` by repeatedly attaching a path
from the smallest unconnected terminal to the current tree.  The path is
determined by the final tree, so each minimal tree is generated once.  The
order of the trees is fixed by branching on the smallest residual edge at
``s0``: either it is unused by every remaining tree, or it belongs to the
next one.

Upper bounds used for pruning and for starting the descending probe:

* every tree uses at least ``|X|`` edges incident to a proper subset ``X``
  of the terminals (it has to leave ``X``);
* a tree uses ``|S|-1`` edges incident to ``S`` only if it lives inside
  ``G[S]``, otherwise at least ``|S|``;
* the local edge connectivity of every terminal pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graph import Edge, Graph, UnsupportedSizeError, components, edge_connectivity, is_connected, norm_edge

DEFAULT_LAMBDA_CAP = 12


@dataclass(frozen=True)
class TerminalSet:
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def validate(self, g: Graph) -> None:
        if not 2 <= len(self.members) <= g.n:
            raise ValueError(f"terminal set size must be in 2..{g.n}, got {len(self.members)}")
        for v in self.members:
            if not 0 <= v < g.n:
                raise ValueError(f"terminal {v} is not a vertex")


@dataclass(frozen=True)
class SteinerTree:
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(norm_edge(u, v) for u, v in self.edges)))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


@dataclass(frozen=True)
class TreePacking:
    terminals: tuple[int, ...]
    trees: tuple[SteinerTree, ...]

    def __len__(self):
        return len(self.trees)

    def to_json(self) -> dict:
        return {"terminals": list(self.terminals),
                "trees": [[list(e) for e in t.edges] for t in self.trees]}

    @classmethod
    def from_json(cls, data: dict | str) -> TreePacking:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["terminals"]),
                   tuple(SteinerTree(tuple(tuple(e) for e in tree)) for tree in data["trees"]))

    def relabel(self, perm: Sequence[int]) -> TreePacking:
        return TreePacking(tuple(sorted(perm[v] for v in self.terminals)),
                           tuple(SteinerTree(tuple((perm[u], perm[v]) for u, v in t.edges))
                                 for t in self.trees))


@dataclass(frozen=True)
class LambdaResult:
    k: int
    value: int
    witness: tuple[int, ...]
    certificate: TreePacking | None


@dataclass(frozen=True)
class PackingCheck:
    ok: bool
    reason: str | None = None
    tree: int | None = None

    def __bool__(self):
        return self.ok


def verify_packing(g: Graph, p: TreePacking) -> PackingCheck:
    """Check that ``p`` is a set of pairwise edge-disjoint trees of ``g`` containing its terminals."""
    used: set[Edge] = set()
    terminals = set(p.terminals)
    for i, tree in enumerate(p.trees):
        edges = set(tree.edges)
        if len(edges) != len(tree.edges):
            return PackingCheck(False, "not-a-tree", i)
        if not edges <= g.edges:
            return PackingCheck(False, "edge-not-in-graph", i)
        verts = tree.vertices
        if not edges:
            # single vertex tree
            if len(terminals) <= 1 and (not terminals or terminals <= verts):
                continue
            return PackingCheck(False, "missing-terminal", i)
        if len(edges) != len(verts) - 1 or not _connected_edges(edges, verts):
            return PackingCheck(False, "not-a-tree", i)
        if not terminals <= verts:
            return PackingCheck(False, "missing-terminal", i)
        if used & edges:
            return PackingCheck(False, "overlap", i)
        used |= edges
    return PackingCheck(True)


def _connected_edges(edges: set[Edge], verts: frozenset[int]) -> bool:
    nbrs: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        for y in nbrs[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def minimal_subtree(tree_edges: Iterable[Edge], terminals: Iterable[int]) -> SteinerTree:
    """Prune non-terminal leaves until every leaf is a terminal."""
    edges = set(norm_edge(u, v) for u, v in tree_edges)
    keep = set(terminals)
    while True:
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        leaves = {v for v, d in deg.items() if d == 1 and v not in keep}
        if not leaves:
            return SteinerTree(tuple(edges))
        edges = {e for e in edges if e[0] not in leaves and e[1] not in leaves}


# search ------------------------------------------------------------------

class _Packer:
    """Search state for one (graph, terminal set) pair."""

    def __init__(self, g: Graph, terminals: Sequence[int]):
        self.g = g
        self.terms = sorted(terminals)
        self.k = len(self.terms)
        self.tmask = 0
        for s in self.terms:
            self.tmask |= 1 << s
        self.ends = g.edge_list
        n = g.n
        self.inc = [0] * n
        self.nbr: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.ends):
            bit = 1 << i
            self.inc[u] |= bit
            self.inc[v] |= bit
            self.nbr[u].append((bit, v))
            self.nbr[v].append((bit, u))
        self.inside = 0  # edges with both ends in S
        for i, (u, v) in enumerate(self.ends):
            if self.tmask >> u & 1 and self.tmask >> v & 1:
                self.inside |= 1 << i
        self.tinc = 0
        for s in self.terms:
            self.tinc |= self.inc[s]
        self.base = self._core_edges()
        self.failed: set[tuple[int, int]] = set()

    # -- preprocessing

    def _core_edges(self) -> int:
        """Edges of the component holding the terminals, minus dangling non-terminal parts.

        Returns 0 when the terminals are spread over several components.
        """
        g = self.g
        comp = next(c for c in components(g) if c >> self.terms[0] & 1)
        if self.tmask & ~comp:
            return 0
        R = 0
        for i, (u, v) in enumerate(self.ends):
            if comp >> u & 1:
                R |= 1 << i
        changed = True
        while changed:
            changed = False
            for v in range(g.n):
                if self.tmask >> v & 1:
                    continue
                at = R & self.inc[v]
                if at and at & (at - 1) == 0:
                    R &= ~at
                    changed = True
        return R

    # -- bounds

    def residual_bound(self, R: int) -> int:
        """Cheap upper bound on the number of S-trees inside edge set ``R``."""
        k = self.k
        best = min((R & self.inc[s]).bit_count() for s in self.terms)
        inc = (R & self.tinc).bit_count()
        inner = (R & self.inside).bit_count()
        best = min(best, _s_incident_bound(inc, inner, k))
        best = min(best, R.bit_count() // (k - 1))
        return best

    def subset_bound(self, R: int) -> int:
        """Bound from every proper subset of the terminals plus the whole set."""
        best = self.residual_bound(R)
        terms = self.terms
        incs = [R & self.inc[s] for s in terms]
        for size in range(2, self.k):
            for combo in combinations(range(self.k), size):
                mask = 0
                for i in combo:
                    mask |= incs[i]
                best = min(best, mask.bit_count() // size)
        return best

    def max_flow(self, R: int, s: int, t: int, limit: int) -> int:
        return len(self.flow_paths(R, s, t, limit, decompose=False))

    def flow_paths(self, R: int, s: int, t: int, limit: int, decompose: bool = True) -> list[int]:
        """Edge-disjoint s-t paths in ``R`` (as edge masks), at most ``limit`` of them."""
        ends = self.ends
        nbr = self.nbr
        flow: dict[int, int] = {}
        value = 0
        while value < limit:
            parent = {s: None}
            frontier = [s]
            found = False
            while frontier and not found:
                nxt = []
                for x in frontier:
                    for bit, y in nbr[x]:
                        if not R & bit or y in parent:
                            continue
                        d = 1 if ends[bit.bit_length() - 1][0] == x else -1
                        if flow.get(bit, 0) * d >= 1:
                            continue
                        parent[y] = (x, bit, d)
                        if y == t:
                            found = True
                            break
                        nxt.append(y)
                    if found:
                        break
                frontier = nxt
            if not found:
                break
            y = t
            while y != s:
                x, bit, d = parent[y]
                flow[bit] = flow.get(bit, 0) + d
                y = x
            value += 1
        if not decompose:
            return [0] * value
        # walk the flow from s to t, cutting cycles
        out_arcs: dict[int, list[tuple[int, int]]] = {}
        for bit, f in flow.items():
            if f == 0:
                continue
            a, b = ends[bit.bit_length() - 1]
            if f < 0:
                a, b = b, a
            out_arcs.setdefault(a, []).append((bit, b))
        paths = []
        for _ in range(value):
            stack_v = [s]
            stack_e: list[int] = []
            while stack_v[-1] != t:
                bit, y = out_arcs[stack_v[-1]].pop()
                if y in stack_v:
                    cut = stack_v.index(y)
                    del stack_v[cut + 1:]
                    del stack_e[cut:]
                else:
                    stack_v.append(y)
                    stack_e.append(bit)
            mask = 0
            for bit in stack_e:
                mask |= bit
            paths.append(mask)
        return paths

    def flow_ok(self, R: int, need: int) -> bool:
        s0 = self.terms[0]
        return all(self.max_flow(R, s0, s, need) >= need for s in self.terms[1:])

    # -- tree generation

    def _paths(self, x: int, tv: int, avail: int, length: int) -> Iterator[tuple[int, int]]:
        """Simple paths of exactly ``length`` edges from ``x`` to the vertex set ``tv``.

        Internal vertices avoid ``tv``.  Yields ``(new vertices, edges)`` masks.
        """
        nbr = self.nbr

        def rec(cur, visited, emask, depth):
            depth += 1
            for bit, y in nbr[cur]:
                if not avail & bit:
                    continue
                if tv >> y & 1:
                    if depth == length:
                        yield visited, emask | bit
                elif depth < length and not visited >> y & 1:
                    yield from rec(y, visited | (1 << y), emask | bit, depth)

        return rec(x, 1 << x, 0, 0)

    def _grow(self, R: int, tv: int, te: int, need: int, active: int) -> Iterator[int]:
        avail = R & ~te
        unconnected = self.tmask & ~tv
        if not unconnected:
            yield te
            return
        for s in self.terms:
            want = need - 1 if tv >> s & 1 else need
            if (avail & self.inc[s]).bit_count() < want:
                return
        if avail.bit_count() < (need - 1) * (self.k - 1) + unconnected.bit_count():
            return
        x = (unconnected & -unconnected).bit_length() - 1
        max_len = (active & ~tv).bit_count()
        for length in range(1, max_len + 1):
            for verts, edges in self._paths(x, tv, avail, length):
                yield from self._grow(R, tv | verts, te | edges, need, active)

    def _trees_through(self, R: int, bit: int, need: int) -> Iterator[int]:
        s0 = self.terms[0]
        u, v = self.ends[bit.bit_length() - 1]
        w = v if u == s0 else u
        active = 0
        for i, (a, b) in enumerate(self.ends):
            if R >> i & 1:
                active |= (1 << a) | (1 << b)
        w_terminal = self.tmask >> w & 1
        for tree in self._grow(R, (1 << s0) | (1 << w), bit, need, active):
            if not w_terminal and (tree & self.inc[w]).bit_count() < 2:
                continue
            yield tree

    def solve(self, R: int, need: int) -> list[int] | None:
        if need == 0:
            return []
        key = (R, need)
        if key in self.failed:
            return None
        s0 = self.terms[0]
        at = R & self.inc[s0]
        while at and self.residual_bound(R) >= need:
            bit = at & -at
            for tree in self._trees_through(R, bit, need):
                rest_R = R & ~tree
                if need > 1:
                    if self.residual_bound(rest_R) < need - 1:
                        continue
                    if not self.flow_ok(rest_R, need - 1):
                        continue
                rest = self.solve(rest_R, need - 1)
                if rest is not None:
                    return [tree] + rest
            R &= ~bit
            at &= ~bit
        self.failed.add(key)
        return None

    def to_packing(self, masks: list[int]) -> TreePacking:
        trees = []
        for mask in masks:
            trees.append(SteinerTree(tuple(self.ends[i] for i in range(len(self.ends)) if mask >> i & 1)))
        return TreePacking(tuple(self.terms), tuple(trees))


def _s_incident_bound(inc: int, inner: int, k: int) -> int:
    """Largest t with ``t*k - min(t, inner // (k-1)) <= inc``."""
    if k < 2:
        return inc
    inside_trees = inner // (k - 1)
    t = (inc + inside_trees) // k
    if t >= inside_trees:
        return t
    # every tree could live inside G[S]
    return min(inside_trees, inc // (k - 1))


# public API ----------------------------------------------------------------

def _as_terminals(g: Graph, s) -> TerminalSet:
    ts = s if isinstance(s, TerminalSet) else TerminalSet(tuple(s))
    ts.validate(g)
    return ts


def pack_trees(g: Graph, s, t: int) -> TreePacking | None:
    """Return ``t`` pairwise edge-disjoint minimal ``s``-trees, or ``None`` if none exist."""
    if t < 1:
        raise ValueError("target count must be at least 1")
    ts = _as_terminals(g, s)
    packer = _Packer(g, ts.members)
    return _pack_with(packer, t)


def _pack_with(packer: _Packer, t: int) -> TreePacking | None:
    R = packer.base
    if not R or packer.subset_bound(R) < t:
        return None
    masks = packer.solve(R, t)
    return None if masks is None else packer.to_packing(masks)


def steiner_upper_bound(g: Graph, s, pair_lambda: dict | None = None) -> int:
    """Upper bound on lambda(S) from edge counts and pairwise edge connectivity."""
    ts = _as_terminals(g, s)
    packer = _Packer(g, ts.members)
    if not packer.base:
        return 0
    bound = packer.subset_bound(packer.base)
    s0 = ts.members[0]
    for v in ts.members[1:]:
        if pair_lambda is not None:
            bound = min(bound, pair_lambda[(s0, v)])
        else:
            bound = min(bound, packer.max_flow(packer.base, s0, v, bound))
    return bound


def steiner_local_lambda(g: Graph, s) -> tuple[int, TreePacking]:
    """Maximum number of edge-disjoint ``s``-trees, with a certificate packing."""
    ts = _as_terminals(g, s)
    packer = _Packer(g, ts.members)
    if not packer.base:
        return 0, TreePacking(ts.members, ())
    if len(ts) == 2:
        u, v = ts.members
        paths = packer.flow_paths(packer.base, u, v, g.degree(u))
        return len(paths), packer.to_packing(paths)
    t = steiner_upper_bound(g, ts)
    while t >= 1:
        found = _pack_with(packer, t)
        if found is not None:
            return t, found
        t -= 1
    raise AssertionError("connected terminal set without a Steiner tree")


def pairwise_lambda(g: Graph) -> dict[tuple[int, int], int]:
    """Local edge connectivity for every ordered pair ``u < v``."""
    packer = _Packer(g, list(range(min(g.n, 2))))
    full = (1 << g.m) - 1
    out = {}
    for u, v in combinations(range(g.n), 2):
        out[(u, v)] = packer.max_flow(full, u, v, min(g.degree(u), g.degree(v)))
    return out


def _straddling_witness(g: Graph, k: int) -> tuple[int, ...]:
    comp_of = {}
    for i, comp in enumerate(components(g)):
        for v in range(g.n):
            if comp >> v & 1:
                comp_of[v] = i
    for combo in combinations(range(g.n), k):
        if len({comp_of[v] for v in combo}) > 1:
            return combo
    raise AssertionError("disconnected graph without a straddling set")


def lambda_k(g: Graph, k: int, cap: int = DEFAULT_LAMBDA_CAP,
             lower_bound_hint: int | None = None) -> LambdaResult:
    """Generalized k-edge-connectivity: the minimum of lambda(S) over all k-sets S.

    Returns the lexicographically smallest minimizing terminal set together
    with a packing certificate for it.  ``lower_bound_hint`` may carry a
    proven lower bound valid for every k-set (for example the number of
    edge-disjoint spanning trees); it is never used when ``k == n``.
    """
    n = g.n
    if not 2 <= k <= n:
        raise ValueError(f"k must satisfy 2 <= k <= n = {n}, got {k}")
    if n > cap:
        raise UnsupportedSizeError(f"lambda_k is capped at n <= {cap}, got n = {n}")
    if not is_connected(g):
        return LambdaResult(k, 0, _straddling_witness(g, k), TreePacking(_straddling_witness(g, k), ()))
    if k == 2:
        return _lambda_two(g)

    pair = pairwise_lambda(g)
    sets = list(combinations(range(n), k))
    packers = {}
    ub = {}
    for S in sets:
        packers[S] = packer = _Packer(g, S)
        bound = packer.subset_bound(packer.base)
        s0 = S[0]
        for v in S[1:]:
            bound = min(bound, pair[(s0, v)])
        ub[S] = bound
    hint = lower_bound_hint if (lower_bound_hint is not None and k < n) else 0

    best = min(ub.values())
    lower = {}   # proven lower bound on lambda(S)
    exact = {}
    certs: dict[tuple[int, ...], TreePacking] = {}
    for S in sorted(sets, key=lambda S: (ub[S], S)):
        if hint >= best:
            lower[S] = hint
            continue
        found = _pack_with(packers[S], best)
        if found is not None:
            lower[S] = best
            certs[S] = found
            continue
        t = best - 1
        while t > hint:
            found = _pack_with(packers[S], t)
            if found is not None:
                break
            t -= 1
        best = t
        lower[S] = exact[S] = t
        if found is not None:
            certs[S] = found

    witness = None
    for S in sets:
        if exact.get(S) == best or ub[S] == best:
            witness = S
            break
        if lower[S] > best:
            continue
        if _pack_with(packers[S], best + 1) is None:
            witness = S
            break
        lower[S] = best + 1
    assert witness is not None
    cert = certs.get(witness)
    if cert is None or len(cert) != best:
        cert = _pack_with(packers[witness], best) if best > 0 else TreePacking(witness, ())
    return LambdaResult(k, best, witness, cert)


def _lambda_two(g: Graph) -> LambdaResult:
    value = edge_connectivity(g)
    packer = _Packer(g, [0, 1])
    full = (1 << g.m) - 1
    for u, v in combinations(range(g.n), 2):
        paths = packer.flow_paths(full, u, v, value + 1)
        if len(paths) == value:
            packer.terms = [u, v]
            return LambdaResult(2, value, (u, v), packer.to_packing(paths))
    raise AssertionError("no pair attains the edge connectivity")
