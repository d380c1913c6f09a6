from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import linear_hypergraphs
from linsat.constructions import t_prime, t_star
from linsat.errors import (
    HypergraphError,
    LabelClash,
    MissingAnchor,
    NotLinear,
    NotUniform,
    UnknownVertex,
)
from linsat.hypercore import (
    LinearHypergraph,
    build,
    candidate_edges,
    components,
    disjoint_union,
    fresh_copy,
    identify,
    incidence_tree_holds,
    induced,
    k_identify,
    relabel,
    shadow_edge_count,
    shadow_graph,
    shift_labels,
)


def test_build_normalizes_edges():
    H = build(5, 3, [(4, 2, 0), (1, 0, 3)])
    assert H.edges == ((0, 1, 3), (0, 2, 4))
    assert H.n == 5 and H.m == 2
    assert H.edge_for(2, 0) == (0, 2, 4)
    assert H.edge_for(1, 2) is None
    assert H.degree(0) == 2 and H.isolated() == []


def test_build_rejects_bad_input():
    with pytest.raises(NotUniform):
        build(4, 3, [(0, 1)])
    with pytest.raises(NotUniform):
        build(4, 3, [(0, 1, 1)])
    with pytest.raises(UnknownVertex):
        build(3, 3, [(0, 1, 5)])
    with pytest.raises(NotLinear) as info:
        build(5, 3, [(0, 1, 2), (0, 1, 3)])
    assert info.value.first == (0, 1, 2) and info.value.second == (0, 1, 3)
    with pytest.raises(HypergraphError):
        build(3, 1, [])
    with pytest.raises(HypergraphError):
        LinearHypergraph([-1, 0, 1], 3)


def test_isolated_vertices_are_kept():
    H = build(8, 3, [(0, 1, 2)])
    assert H.isolated() == [3, 4, 5, 6, 7]
    assert H.min_degree() == 0


def test_add_and_remove_edge():
    H = build(7, 3, [(0, 1, 2)])
    assert H.can_add((0, 3, 4))
    assert not H.can_add((0, 1, 5))
    assert not H.can_add((0, 1, 2))
    assert not H.can_add((0, 3, 9))
    G = H.add_edge((0, 3, 4))
    assert G.m == 2 and H.m == 1
    assert G.remove_edge((4, 3, 0)) == H
    with pytest.raises(HypergraphError):
        H.remove_edge((3, 4, 5))
    with pytest.raises(NotLinear):
        H.add_edge((0, 1, 5))


def _brute_candidates(H):
    out = []
    for e in combinations(H.sorted_vertices(), H.k):
        if e in H.edges:
            continue
        if all(len(set(e) & set(f)) <= 1 for f in H.edges):
            out.append(e)
    return out


@settings(max_examples=150, deadline=None)
@given(linear_hypergraphs(max_n=9, ks=(3, 4)))
def test_candidate_edges_matches_definition(H):
    assert list(candidate_edges(H)) == _brute_candidates(H)


@settings(max_examples=100, deadline=None)
@given(linear_hypergraphs(max_n=14, ks=(3, 4, 5)))
def test_pair_index_and_shadow(H):
    assert len(H.pair_index) == comb(H.k, 2) * H.m
    S = shadow_graph(H)
    assert len(S.edges) == shadow_edge_count(H.m, H.k)
    for v in H.vertices:
        assert S.degree(v) == (H.k - 1) * H.degree(v)
    for pair, source in S.provenance.items():
        assert set(pair) <= set(source) and source in H.edges


@settings(max_examples=100, deadline=None)
@given(linear_hypergraphs(max_n=12, ks=(3, 4)))
def test_components_partition(H):
    parts = components(H)
    assert sorted(v for C in parts for v in C.vertices) == H.sorted_vertices()
    assert sorted(e for C in parts for e in C.edges) == list(H.edges)
    assert [min(C.vertices) for C in parts] == sorted(min(C.vertices) for C in parts)
    assert incidence_tree_holds(H)


def test_components_of_disjoint_union():
    G = disjoint_union(t_prime(), shift_labels(t_prime(), 7))
    parts = components(G)
    assert len(parts) == 2
    assert [C.n for C in parts] == [7, 7]
    with pytest.raises(LabelClash):
        disjoint_union(t_prime(), t_prime())


def test_relabel_and_shift():
    H = build(4, 3, [(0, 1, 2)])
    G = relabel(H, {0: 10, 3: 0})
    assert G.edges == ((1, 2, 10),) and G.vertices == {0, 1, 2, 10}
    with pytest.raises(LabelClash):
        relabel(H, {0: 1})
    assert shift_labels(H, 5, keep=[0]).edges == ((0, 6, 7),)
    F = fresh_copy(H, 1, 20)
    assert F.vertices == {1, 20, 21, 22}


def test_identify():
    G = build(3, 3, [(0, 1, 2)])
    H = build([0, 5, 6], 3, [(0, 5, 6)])
    J = identify(G, H, 0)
    assert J.n == 5 and J.degree(0) == 2
    with pytest.raises(MissingAnchor):
        identify(G, H, 1)
    with pytest.raises(LabelClash):
        identify(G, G, 0)


@pytest.mark.parametrize("count", [0, 1, 2, 3])
def test_k_identify_counts(count):
    G = k_identify(count, t_star(), t_prime(), 0)
    assert G.n == 7 + 18 * count
    assert G.m == 4 + 15 * count
    assert G.degree(0) == 3 + 9 * count
    assert len(components(G)) == 1


def test_k_identify_labels_follow_blocks():
    G = k_identify(2, t_prime(), build(1, 3), 0, first_label=1)
    assert G.sorted_vertices() == list(range(13))
    assert induced(G, range(7)).m == 4


def test_induced():
    H = t_star()
    X = range(7)
    assert induced(H, X).m == 4
    with pytest.raises(UnknownVertex):
        induced(H, [99])


@given(st.integers(0, 30), st.integers(2, 6))
def test_shadow_edge_count(m, k):
    assert shadow_edge_count(m, k) == m * k * (k - 1) // 2


def test_equality_and_hash():
    a = build(5, 3, [(0, 1, 2)])
    b = build([4, 3, 2, 1, 0], 3, [(2, 1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != build(6, 3, [(0, 1, 2)])
