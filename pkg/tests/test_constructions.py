import pytest

from linsat.berge import is_berge_path_connected
from linsat.bounds import GADGET_EDGES, c4_family_edges, sat_c3_exact
from linsat.constructions import (
    T_STAR_EDGES,
    c3_star,
    c4_family,
    gadget_is_acceptable,
    t_prime,
    t_prime_gadget,
    t_star,
)
from linsat.errors import BadResidue, OutOfDomain, TooSmall
from linsat.hypercore import components
from linsat.saturation import is_free, is_saturated


def test_t_star_shape():
    H = t_star()
    assert H.n == 19 and H.m == 15 and len(T_STAR_EDGES) == 15
    degrees = H.degrees()
    assert degrees[0] == 9
    assert all(d == 2 for v, d in degrees.items() if v != 0)


def test_t_prime_shape():
    H = t_prime()
    assert H.n == 7 and H.m == 4
    assert is_free(H, 4)[0] and not is_free(H, 3)[0]
    assert is_berge_path_connected(H, 3)[0]
    assert is_saturated(H, 4).saturated


@pytest.mark.parametrize("n, k", [(6, 3), (7, 3), (8, 3), (9, 4), (13, 5), (4, 4)])
def test_c3_star(n, k):
    H = c3_star(n, k)
    assert H.n == n
    assert H.m == (n - 1) // (k - 1)
    assert is_saturated(H, 3).saturated
    if n >= 6:
        assert H.m == sat_c3_exact(n, k).integer_bound


def test_c3_star_eight_vertices_has_isolated_vertex():
    H = c3_star(8, 3)
    assert H.m == 3 and H.isolated() == [7]


def test_c3_star_too_small():
    with pytest.raises(TooSmall):
        c3_star(2, 3)


@pytest.mark.parametrize("i", range(1, 19))
def test_gadgets(i):
    G = t_prime_gadget(i)
    assert G.n == i
    assert G.m == GADGET_EDGES[i]
    assert 0 in G.vertices
    assert is_saturated(G, 4).saturated
    assert gadget_is_acceptable(G, copies=(0, 1))


def test_gadget_bad_residue():
    for i in (0, 19, -3):
        with pytest.raises(BadResidue):
            t_prime_gadget(i)


@pytest.mark.parametrize("n", range(1, 61))
def test_c4_family_saturated(n):
    H = c4_family(n)
    assert H.n == n
    assert H.sorted_vertices() == list(range(n))
    assert H.m == c4_family_edges(n)
    assert is_saturated(H, 4).saturated


def test_c4_family_is_connected_beyond_one_block():
    for n in (19, 37, 55):
        H = c4_family(n)
        assert len(components(H)) == 1
        assert H.degree(0) == 9 * ((n - 1) // 18)


def test_c4_family_domain():
    with pytest.raises(OutOfDomain):
        c4_family(0)
