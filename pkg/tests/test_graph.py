import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinerng.graph import (
    Graph,
    GraphFormatError,
    UnsupportedSizeError,
    add_edges,
    complement,
    complete,
    components,
    degree_stats,
    delete_edges,
    disjoint_union,
    edge_connectivity,
    empty,
    encode_graph6,
    from_edges,
    is_connected,
    local_edge_connectivity,
    parse_graph6,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_edges_are_normalized():
    g = from_edges(3, [(2, 0), (1, 2)])
    assert g.edges == {(0, 2), (1, 2)}
    assert g.edge_list == ((0, 2), (1, 2))
    assert g.m == 2


@pytest.mark.parametrize("pairs", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_invalid_edges_rejected(pairs):
    with pytest.raises(ValueError):
        from_edges(3, pairs)


def test_neighbourhoods_and_degrees():
    g = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert g.neighbors(0) == [1, 2, 3]
    assert g.degrees() == [3, 2, 2, 1]
    assert degree_stats(g) == (1, 3, [3, 2, 2, 1])
    assert g.has_edge(2, 1) and not g.has_edge(1, 3)


def test_relabel_and_induced():
    g = from_edges(3, [(0, 1), (1, 2)])
    assert g.relabel([2, 0, 1]).edges == {(0, 2), (0, 1)}
    h = g.induced([1, 2])
    assert h.n == 2 and h.edges == {(0, 1)}


def test_operations():
    k4 = complete(4)
    assert k4.m == 6
    assert complement(k4) == empty(4)
    assert delete_edges(k4, [(0, 1), (3, 2)]).m == 4
    assert add_edges(empty(3), [(0, 2)]).edges == {(0, 2)}
    u = disjoint_union(complete(2), complete(3))
    assert u.n == 5 and u.m == 4 and len(components(u)) == 2


@pytest.mark.parametrize("text,n,m", [("?", 0, 0), ("@", 1, 0), ("A_", 2, 1), ("Bw", 3, 3),
                                      ("C~", 4, 6), (">>graph6<<Bw", 3, 3)])
def test_graph6_known_strings(text, n, m):
    g = parse_graph6(text)
    assert (g.n, g.m) == (n, m)


@pytest.mark.parametrize("text", ["", "C", "C~~", "Bw\x7f", "~?@A"])
def test_graph6_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph6(text)


def test_graph6_order_cap():
    with pytest.raises(UnsupportedSizeError):
        encode_graph6(empty(63))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_graph6_matches_networkx(g):
    text = encode_graph6(g)
    assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == text
    assert parse_graph6(text) == g


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    expected_connected = g.n <= 1 or nx.is_connected(h)
    assert is_connected(g) == expected_connected
    assert len(components(g)) == nx.number_connected_components(h)
    expected = nx.edge_connectivity(h) if g.n > 1 and expected_connected else 0
    assert edge_connectivity(g) == expected


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.data())
def test_local_connectivity_matches_networkx(g, data):
    if g.n < 2:
        return
    u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    h = to_nx(g)
    assert local_edge_connectivity(g, u, v) == nx.algorithms.connectivity.local_edge_connectivity(h, u, v)


def test_local_connectivity_rejects_same_vertex():
    with pytest.raises(ValueError):
        local_edge_connectivity(complete(3), 1, 1)
