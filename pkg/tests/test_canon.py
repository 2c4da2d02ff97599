import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_isomorphic
from steinerng.canon import canonical_form, canonical_key, canonical_labeling, is_isomorphic
from steinerng.enumeration import enumerate_graphs
from steinerng.graph import Graph, complete, parse_graph6
from test_graph import graphs, to_nx


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_key_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_key(g.relabel(perm)) == canonical_key(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_canonical_form_is_relabelling(g):
    h, key, perm = canonical_form(g)
    assert sorted(perm) == list(range(g.n))
    assert g.relabel(perm) == h
    assert parse_graph6(key) == h
    assert canonical_labeling(g) == perm


def test_isomorphism_against_permutation_oracle():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 6)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        m = rng.randint(0, len(pairs))
        g = Graph(n, frozenset(rng.sample(pairs, m)))
        h = Graph(n, frozenset(rng.sample(pairs, m)))
        assert is_isomorphic(g, h) == brute_isomorphic(g, h)


def test_distinct_keys_are_non_isomorphic():
    reps = list(enumerate_graphs(6))
    assert len({canonical_key(g) for g in reps}) == len(reps)
    rng = random.Random(1)
    for _ in range(200):
        a, b = rng.sample(reps, 2)
        assert not nx.is_isomorphic(to_nx(a), to_nx(b))


def test_regular_graphs_with_many_automorphisms():
    # Petersen graph and the 3-cube: highly symmetric inputs for the refinement search
    pet = nx.petersen_graph()
    g = Graph(10, frozenset(tuple(sorted(e)) for e in pet.edges))
    perm = list(range(10))
    random.Random(3).shuffle(perm)
    assert canonical_key(g) == canonical_key(g.relabel(perm))
    assert is_isomorphic(complete(10), complete(10).relabel(perm))
