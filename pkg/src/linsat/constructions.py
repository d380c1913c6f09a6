"""Explicit saturated constructions.

Vertex ``v_i`` of a named gadget is label ``i``; the shared vertex is 0.
"""

from __future__ import annotations

from itertools import combinations

from .bounds import GADGET_EDGES
from .errors import BadResidue, OutOfDomain, TooSmall
from .hypercore import LinearHypergraph, build, candidate_edges, k_identify, shift_labels
from .saturation import is_free, is_saturated

T_PRIME_EDGES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (2, 4, 6)]

T_STAR_EDGES = [
    (0, 1, 2), (0, 3, 4), (0, 5, 6), (2, 4, 6),
    (0, 7, 8), (0, 9, 10), (0, 11, 12), (8, 10, 12),
    (0, 13, 14), (0, 15, 16), (0, 17, 18), (14, 16, 18),
    (1, 7, 13), (3, 9, 15), (5, 11, 17),
]

# second copy of T' glued at 0, on 7..12; 7, 9, 12 play the roles of 1, 3, 5
_T_PRIME_COPY = [(0, 7, 8), (0, 9, 10), (0, 11, 12), (8, 10, 11)]

GADGET_EDGE_LISTS: dict[int, list[tuple[int, ...]]] = {
    1: [],
    2: [],
    3: [(0, 1, 2)],
    4: [(1, 2, 3)],
    5: [(0, 1, 2), (0, 3, 4)],
    6: [(0, 1, 2), (2, 3, 4), (0, 4, 5)],
    7: T_PRIME_EDGES,
    8: T_PRIME_EDGES,
    9: T_PRIME_EDGES + [(0, 7, 8)],
    10: T_PRIME_EDGES + [(7, 8, 9)],
    11: T_PRIME_EDGES + [(0, 7, 8), (1, 7, 9), (0, 9, 10)],
    12: T_PRIME_EDGES + [(0, 7, 8), (8, 10, 11), (0, 9, 10)],
    13: T_PRIME_EDGES + _T_PRIME_COPY,
    14: T_PRIME_EDGES + [(7, 8, 9), (7, 10, 11), (7, 12, 13), (9, 11, 13)],
    15: T_PRIME_EDGES + _T_PRIME_COPY + [(0, 13, 14), (1, 7, 14), (3, 9, 13)],
    16: T_PRIME_EDGES + _T_PRIME_COPY + [(13, 14, 15), (1, 9, 13), (5, 12, 14), (3, 7, 15)],
    17: T_PRIME_EDGES + _T_PRIME_COPY + [(0, 13, 14), (1, 7, 14), (3, 9, 13), (14, 15, 16)],
    18: T_PRIME_EDGES + _T_PRIME_COPY + [(0, 13, 14), (14, 15, 16), (0, 16, 17), (1, 7, 13), (3, 9, 17)],
}


def c3_star(n: int, k: int) -> LinearHypergraph:
    """A star of floor((n-1)/(k-1)) edges through vertex 0, padded with isolated vertices."""
    if n < k:
        raise TooSmall(f"need n >= k (got n={n}, k={k})")
    q = (n - 1) // (k - 1)
    edges = [(0, *range(1 + j * (k - 1), 1 + (j + 1) * (k - 1))) for j in range(q)]
    return build(n, k, edges)


def t_star() -> LinearHypergraph:
    """The 19-vertex, 15-edge Berge-C_4-saturated block: three copies of T'
    sharing vertex 0, tied together by three cross edges."""
    return build(19, 3, T_STAR_EDGES)


def t_prime() -> LinearHypergraph:
    return build(7, 3, T_PRIME_EDGES)


def t_prime_gadget(i: int) -> LinearHypergraph:
    """Residue gadget on i vertices (0 plus i-1 new) used for n = 18t + i."""
    if i not in GADGET_EDGE_LISTS:
        raise BadResidue(f"gadget index must be in 1..18, got {i}")
    return build(i, 3, GADGET_EDGE_LISTS[i])


def c4_family(n: int) -> LinearHypergraph:
    """Berge-C_4-saturated linear 3-graph on n vertices.

    floor((n-1)/18) copies of T* and the gadget on the remaining
    i = n - 18t vertices, all glued at vertex 0. Copy c occupies labels
    18c+1 .. 18c+18, the gadget's vertices follow.
    """
    if n < 1:
        raise OutOfDomain(f"requires n >= 1 (got n={n})")
    t = (n - 1) // 18
    gadget = shift_labels(t_prime_gadget(n - 18 * t), 18 * t, keep=[0])
    return k_identify(t, t_star(), gadget, 0, first_label=1)


def gadget_is_acceptable(H: LinearHypergraph, copies=(0, 1)) -> bool:
    """A gadget works if gluing it to each number of T* copies in ``copies``
    yields a Berge-C_4-saturated hypergraph."""
    for t in copies:
        G = k_identify(t, t_star(), shift_labels(H, 18 * t, keep=[0]), 0, first_label=1)
        if not is_saturated(G, 4).saturated:
            return False
    return True


def complete_gadget(i: int, base_edges, total_edges: int | None = None, copies=(0, 1)):
    """Search for extra edges completing ``base_edges`` to an acceptable gadget.

    Tries subsets of the linear candidate additions in lexicographic order
    and returns the first completed edge list, or None.
    """
    if total_edges is None:
        total_edges = GADGET_EDGES[i]
    base = build(i, 3, base_edges)
    need = total_edges - base.m
    if need < 0:
        return None
    pool = list(candidate_edges(base))
    for extra in combinations(pool, need):
        try:
            H = build(i, 3, list(base.edges) + list(extra))
        except ValueError:
            continue
        if not is_free(H, 4)[0]:
            continue
        if gadget_is_acceptable(H, copies):
            return list(H.edges)
    return None


FAMILIES = ("c3-star", "t-star", "t-prime", "gadget", "c4-family")
