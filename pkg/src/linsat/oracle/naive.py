"""Definition-level reference implementations for cross-checking.

Nothing here uses linearity, the pair index, or canonical forms. They are
slow on purpose and only meant for tiny instances.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np


def naive_berge_cycle(edges, t):
    """Some Berge-C_t as ``(support, edges)``, trying every injective vertex
    sequence and every system of distinct edges, or None."""
    edges = [frozenset(e) for e in edges]
    vertices = sorted(set().union(*edges)) if edges else []
    for seq in permutations(vertices, t):
        options = [
            [e for e in edges if seq[i] in e and seq[(i + 1) % t] in e]
            for i in range(t)
        ]
        if any(not opt for opt in options):
            continue
        chosen = _distinct_system(options, [])
        if chosen is not None:
            return seq, tuple(tuple(sorted(e)) for e in chosen)
    return None


def _distinct_system(options, chosen):
    if len(chosen) == len(options):
        return list(chosen)
    for e in options[len(chosen)]:
        if e not in chosen:
            chosen.append(e)
            found = _distinct_system(options, chosen)
            if found is not None:
                return found
            chosen.pop()
    return None


def _is_linear(edges):
    sets = [set(e) for e in edges]
    return all(len(a & b) <= 1 for a, b in combinations(sets, 2))


def naive_is_saturated(n, k, edges, t) -> bool:
    if naive_berge_cycle(edges, t) is not None:
        return False
    present = {frozenset(e) for e in edges}
    for cand in combinations(range(n), k):
        if frozenset(cand) in present:
            continue
        extended = list(edges) + [cand]
        if _is_linear(extended) and naive_berge_cycle(extended, t) is None:
            return False
    return True


def labeled_linear_hypergraphs(n, k, max_edges=None):
    """Every linear k-uniform edge set on vertices 0..n-1 (labeled, not up to isomorphism)."""
    triples = list(combinations(range(n), k))
    out = []

    def grow(start, chosen):
        out.append(list(chosen))
        if max_edges is not None and len(chosen) == max_edges:
            return
        for i in range(start, len(triples)):
            e = set(triples[i])
            if all(len(e & set(f)) <= 1 for f in chosen):
                chosen.append(triples[i])
                grow(i + 1, chosen)
                chosen.pop()

    grow(0, [])
    return out


def naive_extremes(n, k, t):
    """``(sat, ex)`` by checking every labeled linear hypergraph on n vertices."""
    sat = ex = None
    for edges in labeled_linear_hypergraphs(n, k):
        m = len(edges)
        if naive_berge_cycle(edges, t) is None:
            ex = m if ex is None else max(ex, m)
            if (sat is None or m < sat) and naive_is_saturated(n, k, edges, t):
                sat = m
    return sat, ex


_PERM_CACHE: dict[int, np.ndarray] = {}


def _all_perms(n):
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    return _PERM_CACHE[n]


def brute_canonical_key(n, edges) -> tuple:
    """Least sorted edge encoding over all n! relabelings of vertices 0..n-1."""
    if not edges:
        return (n, ())
    perms = _all_perms(n)
    e = np.asarray(edges, dtype=np.int64)
    images = np.sort(perms[:, e], axis=2)
    base = n + 1
    codes = np.zeros(images.shape[:2], dtype=np.int64)
    for j in range(images.shape[2]):
        codes = codes * base + images[:, :, j]
    codes = np.sort(codes, axis=1)
    best = min(map(tuple, codes.tolist()))
    return (n, best)


def brute_isomorphic(H1, H2) -> bool:
    """Isomorphism by trying every bijection between the vertex sets."""
    if H1.n != H2.n or H1.m != H2.m or H1.k != H2.k:
        return False
    v1 = H1.sorted_vertices()
    target = {frozenset(e) for e in H2.edges}
    for image in permutations(H2.sorted_vertices()):
        f = dict(zip(v1, image))
        if all(frozenset(f[v] for v in e) in target for e in H1.edges):
            return True
    return False
