"""Linear k-uniform hypergraphs: validation, candidate additions, shadow graph, gluing."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import HypergraphError, LabelClash, MissingAnchor, NotLinear, NotUniform, UnknownVertex

Edge = tuple[int, ...]
Pair = tuple[int, int]


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


class LinearHypergraph:
    """An immutable, validated linear k-uniform hypergraph.

    Edges are stored as sorted tuples and kept in lexicographic order.
    ``pair_index`` maps every covered vertex pair ``(u, v)`` with ``u < v``
    to the unique edge containing it.
    """

    __slots__ = ("k", "vertices", "edges", "pair_index", "_incidence")

    def __init__(self, vertices: Iterable[int], k: int, edges: Iterable[Iterable[int]] = ()):
        if k < 2:
            raise HypergraphError(f"uniformity must be at least 2, got {k}")
        vset = frozenset(vertices)
        for v in vset:
            if not isinstance(v, int) or v < 0:
                raise HypergraphError(f"vertex labels must be non-negative integers, got {v!r}")
        pair_index: dict[Pair, Edge] = {}
        incidence: dict[int, list[Edge]] = {v: [] for v in vset}
        normalized = []
        for raw in edges:
            raw = tuple(raw)
            edge = tuple(sorted(set(raw)))
            if len(raw) != k or len(edge) != k:
                raise NotUniform(raw, k)
            for v in edge:
                if v not in vset:
                    raise UnknownVertex(v)
            for u, v in combinations(edge, 2):
                other = pair_index.get((u, v))
                if other is not None:
                    raise NotLinear(other, edge)
            for u, v in combinations(edge, 2):
                pair_index[(u, v)] = edge
            for v in edge:
                incidence[v].append(edge)
            normalized.append(edge)
        self.k = k
        self.vertices = vset
        self.edges = tuple(sorted(normalized))
        self.pair_index = pair_index
        self._incidence = {v: tuple(sorted(es)) for v, es in incidence.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def incident(self, v: int) -> tuple[Edge, ...]:
        """Edges containing ``v``, in lexicographic order."""
        try:
            return self._incidence[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def degrees(self) -> dict[int, int]:
        return {v: len(es) for v, es in self._incidence.items()}

    def min_degree(self) -> int:
        return min((len(es) for es in self._incidence.values()), default=0)

    def edge_for(self, u: int, v: int) -> Edge | None:
        """The edge covering the pair ``{u, v}``, or None."""
        return self.pair_index.get(_pair(u, v))

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and _pair(u, v) in self.pair_index

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for e in self.incident(v):
            out.update(e)
        out.discard(v)
        return out

    def isolated(self) -> list[int]:
        return sorted(v for v, es in self._incidence.items() if not es)

    def can_add(self, edge: Iterable[int]) -> bool:
        """True if ``edge`` is a new k-set whose addition keeps the hypergraph linear."""
        e = tuple(sorted(set(edge)))
        if len(e) != self.k or any(v not in self.vertices for v in e):
            return False
        return all(p not in self.pair_index for p in combinations(e, 2))

    def add_edge(self, edge: Iterable[int]) -> LinearHypergraph:
        return LinearHypergraph(self.vertices, self.k, self.edges + (tuple(edge),))

    def remove_edge(self, edge: Iterable[int]) -> LinearHypergraph:
        e = tuple(sorted(edge))
        if e not in self.edges:
            raise HypergraphError(f"edge {list(e)} is not present")
        return LinearHypergraph(self.vertices, self.k, [f for f in self.edges if f != e])

    def __eq__(self, other):
        if not isinstance(other, LinearHypergraph):
            return NotImplemented
        return self.k == other.k and self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.k, self.vertices, self.edges))

    def __repr__(self):
        return f"LinearHypergraph(n={self.n}, k={self.k}, edges={[list(e) for e in self.edges]})"


def build(vertices: int | Iterable[int], k: int, edges: Iterable[Iterable[int]] = ()) -> LinearHypergraph:
    """Validate and build a linear k-uniform hypergraph.

    ``vertices`` is either a vertex count (labels ``0..n-1``) or an iterable of labels.

    Raises NotUniform, NotLinear or UnknownVertex on bad input.
    """
    if isinstance(vertices, int):
        vertices = range(vertices)
    return LinearHypergraph(vertices, k, edges)


def candidate_edges(H: LinearHypergraph) -> Iterator[Edge]:
    """Lazily yield every k-set whose addition keeps H linear, in lexicographic order."""
    verts = H.sorted_vertices()
    k = H.k
    covered = H.pair_index
    chosen: list[int] = []

    def extend(start: int) -> Iterator[Edge]:
        need = k - len(chosen)
        if need == 0:
            yield tuple(chosen)
            return
        for idx in range(start, len(verts) - need + 1):
            v = verts[idx]
            if any(_pair(u, v) in covered for u in chosen):
                continue
            chosen.append(v)
            yield from extend(idx + 1)
            chosen.pop()

    yield from extend(0)


@dataclass(frozen=True)
class ShadowGraph:
    """The 2-section of a linear hypergraph, with each pair mapped to its source edge."""

    vertices: frozenset[int]
    edges: frozenset[Pair]
    provenance: Mapping[Pair, Edge]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> dict[int, int]:
        out = dict.fromkeys(self.vertices, 0)
        for u, v in self.edges:
            out[u] += 1
            out[v] += 1
        return out


def shadow_graph(H: LinearHypergraph) -> ShadowGraph:
    provenance = dict(H.pair_index)
    return ShadowGraph(H.vertices, frozenset(provenance), provenance)


def relabel(H: LinearHypergraph, mapping: Mapping[int, int]) -> LinearHypergraph:
    """Apply an injective vertex relabeling; unmapped vertices keep their label."""
    f = {v: mapping.get(v, v) for v in H.vertices}
    if len(set(f.values())) != len(f):
        raise LabelClash("relabeling is not injective")
    return LinearHypergraph(f.values(), H.k, [[f[v] for v in e] for e in H.edges])


def shift_labels(H: LinearHypergraph, offset: int, keep: Iterable[int] = ()) -> LinearHypergraph:
    """Add ``offset`` to every label except those in ``keep``."""
    keep = set(keep)
    return relabel(H, {v: v + offset for v in H.vertices if v not in keep})


def fresh_copy(G: LinearHypergraph, anchor: int, first_label: int) -> LinearHypergraph:
    """Relabel G so its non-anchor vertices take ``first_label, first_label+1, ...`` in order."""
    others = [v for v in G.sorted_vertices() if v != anchor]
    return relabel(G, {v: first_label + i for i, v in enumerate(others)})


def identify(G: LinearHypergraph, H: LinearHypergraph, v: int) -> LinearHypergraph:
    """Glue G and H at the shared vertex ``v``.

    The caller is responsible for making all other labels disjoint
    (see :func:`fresh_copy`); a clash raises LabelClash.
    """
    if G.k != H.k:
        raise HypergraphError(f"uniformity mismatch: {G.k} vs {H.k}")
    if v not in G.vertices or v not in H.vertices:
        raise MissingAnchor(f"anchor {v} must be a vertex of both hypergraphs")
    clash = (G.vertices & H.vertices) - {v}
    if clash:
        raise LabelClash(f"labels {sorted(clash)} appear on both sides")
    return LinearHypergraph(G.vertices | H.vertices, G.k, G.edges + H.edges)


def k_identify(
    count: int,
    G: LinearHypergraph,
    H: LinearHypergraph,
    v: int,
    first_label: int | None = None,
) -> LinearHypergraph:
    """Glue ``count`` copies of G and one H at ``v``.

    Copy ``c`` has its non-anchor vertices relabeled to the consecutive block
    starting at ``first_label + c * (|V(G)| - 1)``. ``first_label`` defaults
    to one past the largest label of H.
    """
    if count < 0:
        raise HypergraphError("count must be non-negative")
    if v not in H.vertices:
        raise MissingAnchor(f"anchor {v} must be a vertex of H")
    if count == 0:
        return H
    if v not in G.vertices:
        raise MissingAnchor(f"anchor {v} must be a vertex of G")
    if first_label is None:
        first_label = max(H.vertices) + 1
    block = G.n - 1
    result = H
    for c in range(count):
        result = identify(fresh_copy(G, v, first_label + c * block), result, v)
    return result


def components(H: LinearHypergraph) -> list[LinearHypergraph]:
    """Maximal connected sub-hypergraphs, ordered by smallest vertex label."""
    parent = {v: v for v in H.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        root = find(e[0])
        for u in e[1:]:
            r = find(u)
            if r != root:
                parent[r] = root
    groups: dict[int, list[int]] = {}
    for v in H.sorted_vertices():
        groups.setdefault(find(v), []).append(v)
    parts = sorted(groups.values(), key=lambda vs: vs[0])
    return [induced(H, vs) for vs in parts]


def induced(H: LinearHypergraph, X: Iterable[int]) -> LinearHypergraph:
    """Sub-hypergraph on X keeping the edges that lie entirely inside X."""
    X = frozenset(X)
    for v in X:
        if v not in H.vertices:
            raise UnknownVertex(v)
    return LinearHypergraph(X, H.k, [e for e in H.edges if X.issuperset(e)])


def disjoint_union(G: LinearHypergraph, H: LinearHypergraph) -> LinearHypergraph:
    if G.k != H.k:
        raise HypergraphError(f"uniformity mismatch: {G.k} vs {H.k}")
    if G.vertices & H.vertices:
        raise LabelClash(f"labels {sorted(G.vertices & H.vertices)} appear on both sides")
    return LinearHypergraph(G.vertices | H.vertices, G.k, G.edges + H.edges)


def incidence_tree_holds(H: LinearHypergraph) -> bool:
    """Check ``k*m' >= n' + m' - 1`` on every component that has an edge.

    The incidence graph of a connected component is connected, so it has
    at least (vertices + edges - 1) incidences.
    """
    for C in components(H):
        if C.m and H.k * C.m < C.n + C.m - 1:
            return False
    return True


def shadow_edge_count(n_edges: int, k: int) -> int:
    return comb(k, 2) * n_edges
