import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import linear_hypergraphs, maximal_linear
from linsat.berge import find_berge_cycle
from linsat.constructions import c3_star, t_prime, t_star
from linsat.errors import BadLength
from linsat.hypercore import build, candidate_edges, disjoint_union, shift_labels
from linsat.oracle.naive import naive_is_saturated
from linsat.saturation import (
    Verdict,
    component_census,
    cycle_through,
    is_free,
    is_saturated,
)
from linsat.validate import check_cycle


def test_edgeless_is_not_saturated():
    report = is_saturated(build(9, 3), 4)
    assert report.verdict is Verdict.NOT_SATURATED
    assert report.slack_edge == (0, 1, 2)
    assert report.to_dict(build(9, 3), 4)["slack_edge"] == [0, 1, 2]


def test_cycle_means_contains_forbidden():
    report = is_saturated(t_prime(), 3)
    assert report.verdict is Verdict.CONTAINS_FORBIDDEN
    assert report.forbidden_witness is not None
    assert "witness" in report.to_dict(t_prime(), 3)


def test_vacuous_saturation_without_candidates():
    H = build(6, 3, [(0, 1, 2), (3, 4, 5)])
    assert list(candidate_edges(H)) == []
    assert is_saturated(H, 4).saturated
    assert is_saturated(build(2, 3), 3).saturated


def test_t_star_saturated_with_certificates():
    H = t_star()
    report = is_saturated(H, 4, collect_certificates=True)
    assert report.saturated
    cands = list(candidate_edges(H))
    assert set(report.certificates) == set(cands)
    for e, w in report.certificates.items():
        assert e in w.edges
        assert check_cycle(H.edges + (e,), w.support, w.edges, 4) == []
    assert report.to_dict(H, 4)["certificate_count"] == len(cands)


@pytest.mark.parametrize("n", range(6, 16))
def test_star_is_c3_saturated(n):
    assert is_saturated(c3_star(n, 3), 3).saturated


def test_bad_t():
    with pytest.raises(BadLength):
        is_saturated(t_prime(), 2)
    with pytest.raises(BadLength):
        is_free(t_prime(), 1)


@settings(max_examples=80, deadline=None)
@given(linear_hypergraphs(max_n=7, max_attempts=8), st.sampled_from([3, 4]))
def test_agrees_with_definition(H, t):
    assert is_saturated(H, t).saturated == naive_is_saturated(H.n, H.k, H.edges, t)


@settings(max_examples=60, deadline=None)
@given(linear_hypergraphs(max_n=9, max_attempts=10), st.sampled_from([3, 4]))
def test_slack_edge_really_is_slack(H, t):
    report = is_saturated(H, t)
    if report.verdict is Verdict.NOT_SATURATED:
        G = H.add_edge(report.slack_edge)
        assert find_berge_cycle(G, t) is None
        assert cycle_through(H, report.slack_edge, t) is None


@settings(max_examples=60, deadline=None)
@given(linear_hypergraphs(max_n=9, max_attempts=10), st.sampled_from([3, 4, 5]))
def test_greedy_maximal_free_is_saturated(H, t):
    # grow H while staying C_t-free; the end point is saturated by definition
    if not is_free(H, t)[0]:
        return
    while True:
        nxt = next((e for e in candidate_edges(H) if cycle_through(H, e, t) is None), None)
        if nxt is None:
            break
        H = H.add_edge(nxt)
    assert is_saturated(H, t).saturated


def test_maximal_linear_is_free_or_forbidden():
    H = maximal_linear(build(7, 3))
    assert list(candidate_edges(H)) == []
    verdict = is_saturated(H, 3).verdict
    assert verdict in (Verdict.SATURATED, Verdict.CONTAINS_FORBIDDEN)


def test_component_census():
    G = disjoint_union(t_prime(), shift_labels(t_star(), 7))
    census = component_census(G, 4)
    assert census.count == 2
    assert [(c.n, c.m, c.min_degree, c.path_connected) for c in census.components] == [
        (7, 4, 1, True),
        (19, 15, 2, True),
    ]
