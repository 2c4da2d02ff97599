import random

import pytest

from steinerng.canon import canonical_key
from steinerng.graph import Graph
from steinerng.packing import lambda_k


class LambdaTable:
    """Memoized ``lambda_k`` keyed by canonical form, shared across the session."""

    def __init__(self):
        self.values = {}

    def __call__(self, g: Graph, k: int) -> int:
        key = (canonical_key(g, max(10, g.n)), k)
        if key not in self.values:
            self.values[key] = lambda_k(g, k).value
        return self.values[key]


@pytest.fixture(scope="session")
def lam():
    return LambdaTable()


def random_graphs(n: int, count: int, seed: int, p: float = 0.5) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        edges = frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p)
        out.append(Graph(n, edges))
    return out
