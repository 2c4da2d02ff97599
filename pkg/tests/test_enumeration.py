from itertools import combinations

import pytest

from steinerng.canon import canonical_key
from steinerng.enumeration import (
    CONNECTED_COUNTS,
    GRAPH_COUNTS,
    enumerate_graphs,
    graph_keys,
    graph_keys_with_size,
)
from steinerng.graph import Graph, UnsupportedSizeError, is_connected, parse_graph6


def labelled_classes(n):
    """Canonical keys of all 2^C(n,2) labelled graphs (independent of the extension scheme)."""
    pairs = list(combinations(range(n), 2))
    keys = set()
    for mask in range(1 << len(pairs)):
        keys.add(canonical_key(Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))))
    return keys


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_matches_labelled_brute_force(n):
    assert set(graph_keys(n)) == labelled_classes(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    assert len(graph_keys(n)) == GRAPH_COUNTS[n]
    assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) == CONNECTED_COUNTS[n]


def test_spec_examples():
    assert len(list(enumerate_graphs(4))) == 11
    assert len(list(enumerate_graphs(5))) == 34
    assert len(list(enumerate_graphs(6, connected_only=True))) == 112


def test_order_is_by_size_then_key():
    gs = list(enumerate_graphs(5))
    assert [g.m for g in gs] == sorted(g.m for g in gs)
    assert all(is_connected(g) for g in enumerate_graphs(5, connected_only=True))


def test_cap():
    with pytest.raises(UnsupportedSizeError):
        graph_keys(9)


@pytest.mark.parametrize("n", [5, 6])
def test_size_slices_partition_the_enumeration(n):
    total = sum(len(graph_keys_with_size(n, m)) for m in range(n * (n - 1) // 2 + 1))
    assert total == GRAPH_COUNTS[n]
    assert set(graph_keys_with_size(n, 3)) == {k for k in graph_keys(n) if parse_graph6(k).m == 3}


def test_size_slices_beyond_enumeration_cap():
    # three edges on nine vertices: 3K2, P3+K2, P4, K3 and K1,3
    assert len(graph_keys_with_size(9, 3)) == 5
    assert graph_keys_with_size(4, 7) == ()
