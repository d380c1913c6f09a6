"""Canonical forms of linear hypergraphs by individualization-refinement.

The search tree individualizes one vertex of the first smallest
non-singleton cell at a time and refines the vertex coloring against the
edges until it is equitable. Every leaf is a vertex ordering; the form is
the lexicographically least edge encoding over all leaves. Refinement and
cell choice only depend on colors, so the form is label-invariant.

Two vertices lying in exactly the same edges (degree-1 vertices of one
edge, or isolated vertices) can be swapped by an automorphism that fixes
everything else, so only one of them is ever branched on.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field

from ..hypercore import Edge, LinearHypergraph


@dataclass(frozen=True, order=True)
class CanonicalForm:
    key: tuple
    labeling: dict = field(default=None, compare=False, hash=False, repr=False)

    @property
    def bytes(self) -> bytes:
        n, k, edges, mark = self.key
        flat = [n, k, len(edges), *[v for e in edges for v in e], *(mark or ())]
        return array("H", flat).tobytes()


def _refine(colors: list[int], edges_of: list[list[tuple[int, ...]]], marked_of: list[list[bool]]) -> list[int]:
    """Refine vertex colors to an equitable partition; returns new color list.

    Colors are integers whose order is determined by invariant signatures,
    so isomorphic inputs receive corresponding colors.
    """
    n = len(colors)
    num = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            inc = sorted(
                (mk, tuple(sorted(colors[u] for u in others)))
                for others, mk in zip(edges_of[v], marked_of[v])
            )
            sigs.append((colors[v], tuple(inc)))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new = [rank[s] for s in sigs]
        if len(order) == num:
            return new
        colors, num = new, len(order)


def canonical_form(H: LinearHypergraph, marked: Edge | None = None) -> CanonicalForm:
    """Label-invariant fingerprint of H, optionally with one distinguished edge.

    Equal forms if and only if the hypergraphs (with their marked edges) are
    isomorphic. ``labeling`` on the result maps original labels to canonical
    positions ``0..n-1`` for the optimal leaf.
    """
    verts = H.sorted_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    edges = [tuple(idx[v] for v in e) for e in H.edges]
    mark = tuple(sorted(idx[v] for v in marked)) if marked is not None else None
    edges_of: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    marked_of: list[list[bool]] = [[] for _ in range(n)]
    incident: list[list[int]] = [[] for _ in range(n)]
    for j, e in enumerate(edges):
        is_mark = e == mark
        for v in e:
            edges_of[v].append(tuple(u for u in e if u != v))
            marked_of[v].append(is_mark)
            incident[v].append(j)
    twin_key = [tuple(incident[v]) for v in range(n)]

    best: list = [None, None]

    def encode(order_pos):
        relabeled = sorted(tuple(sorted(order_pos[v] for v in e)) for e in edges)
        m = tuple(sorted(order_pos[v] for v in mark)) if mark is not None else None
        return (n, H.k, tuple(relabeled), m)

    def search(colors):
        colors = _refine(colors, edges_of, marked_of)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            key = encode(colors)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, colors
            return
        target = min((len(vs), c) for c, vs in cells.items() if len(vs) > 1)[1]
        seen_twins = set()
        for v in cells[target]:
            if twin_key[v] in seen_twins:
                continue
            seen_twins.add(twin_key[v])
            # v gets a color just below the rest of its cell
            child = [2 * c + (0 if c != target else 1) for c in colors]
            child[v] = 2 * target
            search(child)

    initial = [0] * n
    if mark is not None:
        for v in mark:
            initial[v] = 1
    search(initial)
    labeling = {verts[v]: pos for v, pos in enumerate(best[1])} if n else {}
    return CanonicalForm(best[0], labeling)


def canonical_relabel(H: LinearHypergraph) -> LinearHypergraph:
    """The canonical representative of H's isomorphism class on labels 0..n-1."""
    key = canonical_form(H).key
    return LinearHypergraph(range(H.n), H.k, key[2])
