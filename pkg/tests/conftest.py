"""Shared graph generators for the test suite.

Randomized suites use ``random.Random`` seeded with DEFAULT_SEED for CI
determinism; hypothesis-based properties derandomize themselves.
"""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from zex import Graph

DEFAULT_SEED = 0


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_bipartite(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Random bipartite graph with a random nontrivial part split."""
    left = rng.randint(1, n - 1)
    edges = [
        (u, v)
        for u in range(left)
        for v in range(left, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_bipartite(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    from zex import is_connected

    while True:
        g = random_bipartite(rng, n, p)
        if is_connected(g):
            return g


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, flags) if keep])
