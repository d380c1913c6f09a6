import random

import pytest
from hypothesis import strategies as st

from linsat.hypercore import LinearHypergraph, candidate_edges


def random_linear(rng: random.Random, n: int, k: int, attempts: int) -> LinearHypergraph:
    """Greedy random linear k-graph: try ``attempts`` random k-sets, keep those that fit."""
    H = LinearHypergraph(range(n), k)
    if n < k:
        return H
    for _ in range(attempts):
        e = tuple(sorted(rng.sample(range(n), k)))
        if H.can_add(e):
            H = H.add_edge(e)
    return H


@st.composite
def linear_hypergraphs(draw, max_n=10, ks=(3,), max_attempts=12):
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(min_value=k, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    attempts = draw(st.integers(min_value=0, max_value=max_attempts))
    return random_linear(random.Random(seed), n, k, attempts)


def maximal_linear(H: LinearHypergraph) -> LinearHypergraph:
    while True:
        e = next(candidate_edges(H), None)
        if e is None:
            return H
        H = H.add_edge(e)


@pytest.fixture
def rng():
    return random.Random(20261016)
