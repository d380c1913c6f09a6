"""Witness checkers written directly from the definitions.

Deliberately independent of the search code in :mod:`linsat.berge`: they
only look at the edge list, never at the pair index or shadow graph.
"""

from __future__ import annotations


def check_cycle(edges, support, cycle_edges, t=None) -> list[str]:
    """Return a list of violated conditions (empty when the cycle is valid)."""
    problems = []
    edge_sets = {frozenset(e) for e in edges}
    support = list(support)
    cycle_edges = [frozenset(e) for e in cycle_edges]
    length = len(support)
    if t is not None and length != t:
        problems.append(f"length {length} != {t}")
    if length < 3:
        problems.append("a Berge cycle needs at least 3 support vertices")
    if len(cycle_edges) != length:
        problems.append("support and edge sequences differ in length")
        return problems
    if len(set(support)) != length:
        problems.append("support vertices repeat")
    if len(set(cycle_edges)) != length:
        problems.append("hyperedges repeat")
    for e in cycle_edges:
        if e not in edge_sets:
            problems.append(f"{sorted(e)} is not an edge")
    for i in range(length):
        a, b = support[i], support[(i + 1) % length]
        if a not in cycle_edges[i] or b not in cycle_edges[i]:
            problems.append(f"edge {sorted(cycle_edges[i])} misses {a} or {b}")
    return problems


def check_path(edges, support, path_edges, length=None) -> list[str]:
    problems = []
    edge_sets = {frozenset(e) for e in edges}
    support = list(support)
    path_edges = [frozenset(e) for e in path_edges]
    if length is not None and len(path_edges) != length:
        problems.append(f"length {len(path_edges)} != {length}")
    if len(support) != len(path_edges) + 1:
        problems.append("a path of length l has l + 1 support vertices")
        return problems
    if len(set(support)) != len(support):
        problems.append("support vertices repeat")
    if len(set(path_edges)) != len(path_edges):
        problems.append("hyperedges repeat")
    for i, e in enumerate(path_edges):
        if e not in edge_sets:
            problems.append(f"{sorted(e)} is not an edge")
        if support[i] not in e or support[i + 1] not in e:
            problems.append(f"edge {sorted(e)} misses {support[i]} or {support[i + 1]}")
    return problems


def is_valid_cycle(H, w, t=None) -> bool:
    return not check_cycle(H.edges, w.support, w.edges, t)


def is_valid_path(H, w, length=None) -> bool:
    return not check_path(H.edges, w.support, w.edges, length)
