"""Berge cycles and Berge paths in linear hypergraphs.

In a linear hypergraph every vertex pair lies in at most one edge, so a
Berge cycle (or path) is determined by its support sequence: consecutive
support vertices pick out their unique covering edge. Searching therefore
reduces to walks in the shadow graph whose steps come from pairwise
distinct hyperedges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadLength, HypergraphError, UnknownVertex
from .hypercore import Edge, LinearHypergraph, components


@dataclass(frozen=True)
class BergeCycleWitness:
    support: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.support)

    def __str__(self):
        return format_witness(self)


@dataclass(frozen=True)
class BergePathWitness:
    support: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def __str__(self):
        return format_witness(self)


def format_witness(w) -> str:
    """One-line form ``v1 (e1) v2 (e2) ...``; paths end with their last vertex."""
    parts = []
    for v, e in zip(w.support, w.edges):
        parts.append(f"{v} ({' '.join(map(str, e))})")
    if len(w.support) > len(w.edges):
        parts.append(str(w.support[-1]))
    return " ".join(parts)


def support_of(w: BergeCycleWitness) -> frozenset[int]:
    return frozenset(w.support)


def _adjacency(H: LinearHypergraph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in H.vertices}
    for u, v in H.pair_index:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj.values():
        nbrs.sort()
    return adj


def canonical_cycle(support, edges) -> BergeCycleWitness:
    """Rotate/reflect a cycle so it starts at its minimum support vertex
    and the second vertex is smaller than the last.

    ``edges[i]`` joins ``support[i]`` and ``support[(i + 1) % t]``.
    """
    s, e = list(support), list(edges)
    i = s.index(min(s))
    s, e = s[i:] + s[:i], e[i:] + e[:i]
    if len(s) > 2 and s[-1] < s[1]:
        s = [s[0]] + s[:0:-1]
        e = e[::-1]
    return BergeCycleWitness(tuple(s), tuple(e))


def cycle_from_support(H: LinearHypergraph, support) -> BergeCycleWitness:
    """Canonical witness for a cyclic support sequence of H."""
    s = list(support)
    t = len(s)
    edges = [H.edge_for(s[j], s[(j + 1) % t]) for j in range(t)]
    if any(e is None for e in edges):
        raise HypergraphError(f"support {s} is not a closed walk of H")
    return canonical_cycle(s, edges)


def find_berge_cycle(H: LinearHypergraph, t: int) -> BergeCycleWitness | None:
    """Return the canonical Berge-C_t of H with lexicographically least support, or None."""
    if t < 3:
        raise BadLength(f"cycle length must be at least 3, got {t}")
    if H.m < t:
        return None
    adj = _adjacency(H)
    pair_index = H.pair_index

    for s in sorted(H.vertices):
        if len(adj[s]) < 2:
            continue
        path = [s]
        used: set[Edge] = set()

        def dfs(cur: int) -> list[int] | None:
            if len(path) == t:
                if path[1] > cur:
                    return None
                closing = pair_index.get((s, cur))
                if closing is not None and closing not in used:
                    return list(path)
                return None
            for x in adj[cur]:
                if x <= s or x in path:
                    continue
                e = pair_index[(cur, x) if cur < x else (x, cur)]
                if e in used:
                    continue
                path.append(x)
                used.add(e)
                found = dfs(x)
                path.pop()
                used.discard(e)
                if found:
                    return found
            return None

        found = dfs(s)
        if found:
            return cycle_from_support(H, found)
    return None


def _check_path_args(H: LinearHypergraph, u: int, w: int, length: int):
    if length < 1:
        raise BadLength(f"path length must be at least 1, got {length}")
    for v in (u, w):
        if v not in H.vertices:
            raise UnknownVertex(v)
    if u == w:
        raise HypergraphError("path endpoints must differ")


def find_berge_path(H: LinearHypergraph, u: int, w: int, length: int) -> BergePathWitness | None:
    """Berge path of exactly ``length`` edges from u to w with least support sequence, or None."""
    _check_path_args(H, u, w, length)
    adj = _adjacency(H)
    pair_index = H.pair_index
    path = [u]
    used: set[Edge] = set()

    def dfs(cur: int) -> bool:
        last_step = len(path) == length
        for x in adj[cur]:
            if last_step != (x == w) or x in path:
                continue
            e = pair_index[(cur, x) if cur < x else (x, cur)]
            if e in used:
                continue
            path.append(x)
            used.add(e)
            if last_step or dfs(x):
                return True
            path.pop()
            used.discard(e)
        return False

    if not dfs(u):
        return None
    edges = tuple(H.edge_for(a, b) for a, b in zip(path, path[1:]))
    return BergePathWitness(tuple(path), edges)


def path_endpoints(H: LinearHypergraph, u: int, length: int, adj=None) -> set[int]:
    """All w reachable from u by a Berge path of exactly ``length`` edges."""
    if length < 1:
        raise BadLength(f"path length must be at least 1, got {length}")
    if adj is None:
        adj = _adjacency(H)
    pair_index = H.pair_index
    reached: set[int] = set()
    path = [u]
    used: set[Edge] = set()

    def dfs(cur: int, depth: int):
        for x in adj[cur]:
            if x in path:
                continue
            e = pair_index[(cur, x) if cur < x else (x, cur)]
            if e in used:
                continue
            if depth + 1 == length:
                reached.add(x)
                continue
            path.append(x)
            used.add(e)
            dfs(x, depth + 1)
            path.pop()
            used.discard(e)

    dfs(u, 0)
    return reached


def is_berge_path_connected(H: LinearHypergraph, length: int) -> tuple[bool, tuple[int, int] | None]:
    """Whether every non-adjacent pair is joined by a Berge path of exactly ``length`` edges.

    Returns ``(True, None)`` or ``(False, (u, w))`` with the least failing pair.
    A single vertex or a single edge passes trivially since it has no
    non-adjacent pairs. Disconnected inputs fail with a cross-component pair.
    """
    if length < 1:
        raise BadLength(f"path length must be at least 1, got {length}")
    adj = _adjacency(H)
    verts = H.sorted_vertices()
    for i, u in enumerate(verts):
        reached = None
        for w in verts[i + 1:]:
            if H.adjacent(u, w):
                continue
            if reached is None:
                reached = path_endpoints(H, u, length, adj)
            if w not in reached:
                return False, (u, w)
    return True, None


def is_berge_path_connected_by_component(H: LinearHypergraph, length: int) -> bool:
    return all(is_berge_path_connected(C, length)[0] for C in components(H))
