"""Plain-text hypergraph format and DOT export.

Format::

    p hg <n> <k>        optional header
    # comment
    v <id>              declares a vertex that lies in no edge
    0 1 2               one hyperedge per line

Without a ``v`` line, isolated vertices are filled in from the header
count using the smallest unused labels, so ``p hg 9 3`` alone is the
edgeless hypergraph on ``0..8``.
"""

from __future__ import annotations

from pathlib import Path

from .errors import HypergraphError, ParseError
from .hypercore import LinearHypergraph, shadow_graph


def parse_text(text: str, k: int | None = None) -> LinearHypergraph:
    header_n = None
    declared: list[int] = []
    edges: list[tuple[int, ...]] = []
    edge_lines: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if len(fields) != 4 or fields[1] != "hg":
                raise ParseError(line_no, f"malformed header {line!r}, expected 'p hg <n> <k>'")
            if header_n is not None or edges or declared:
                raise ParseError(line_no, "header must come first and appear once")
            header_n, header_k = _ints(fields[2:], line_no)
            if k is not None and header_k != k:
                raise ParseError(line_no, f"header uniformity {header_k} disagrees with requested {k}")
            k = header_k
            continue
        if fields[0] == "v":
            if len(fields) != 2:
                raise ParseError(line_no, f"malformed vertex line {line!r}")
            declared.extend(_ints(fields[1:], line_no))
            continue
        edge = tuple(_ints(fields, line_no))
        if k is None:
            k = len(edge)
        if len(edge) != k:
            raise ParseError(line_no, f"edge has {len(edge)} vertices, expected {k}")
        edges.append(edge)
        edge_lines.append(line_no)
    if k is None:
        raise ParseError(0, "cannot infer uniformity: no header and no edges")

    vertices = set(declared)
    for e in edges:
        vertices.update(e)
    if header_n is not None:
        if len(vertices) > header_n:
            raise ParseError(0, f"header declares {header_n} vertices but {len(vertices)} are used")
        label = 0
        while len(vertices) < header_n:
            vertices.add(label)
            label += 1
    try:
        return LinearHypergraph(vertices, k, edges)
    except HypergraphError as exc:
        line_no = _locate(exc, edges, edge_lines)
        raise ParseError(line_no, f"{type(exc).__name__}: {exc}") from exc


def _ints(fields, line_no):
    try:
        values = [int(f) for f in fields]
    except ValueError:
        raise ParseError(line_no, f"expected integers, got {' '.join(fields)!r}") from None
    if any(v < 0 for v in values):
        raise ParseError(line_no, "vertex labels must be non-negative")
    return values


def _locate(exc, edges, edge_lines):
    # report the line of the later offending edge
    target = getattr(exc, "second", None) or getattr(exc, "edge", None)
    found = 0
    for e, ln in zip(edges, edge_lines):
        if target is not None:
            if sorted(e) == sorted(target):
                found = ln
        elif getattr(exc, "vertex", None) in e:
            return ln
    return found


def format_text(H: LinearHypergraph) -> str:
    lines = [f"p hg {H.n} {H.k}"]
    lines += [f"v {v}" for v in H.isolated()]
    lines += [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def read_hypergraph(path, k: int | None = None) -> LinearHypergraph:
    return parse_text(Path(path).read_text(), k)


def write_hypergraph(H: LinearHypergraph, path) -> None:
    Path(path).write_text(format_text(H))


_PALETTE = [
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta",
    "cyan4", "gold3", "navy", "olivedrab", "tomato", "steelblue", "sienna",
]


def shadow_dot(H: LinearHypergraph) -> str:
    """DOT text for the shadow graph; edges from one hyperedge share a color."""
    S = shadow_graph(H)
    color = {e: _PALETTE[i % len(_PALETTE)] for i, e in enumerate(H.edges)}
    out = ["graph shadow {"]
    out += [f"  {v};" for v in sorted(S.vertices)]
    for u, v in sorted(S.edges):
        src = S.provenance[(u, v)]
        label = ",".join(map(str, src))
        out.append(f'  {u} -- {v} [color={color[src]}, label="{label}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def incidence_dot(H: LinearHypergraph) -> str:
    """DOT text for the bipartite vertex/hyperedge incidence graph."""
    out = ["graph incidence {"]
    out += [f'  v{v} [label="{v}", shape=circle];' for v in H.sorted_vertices()]
    for i, e in enumerate(H.edges):
        out.append(f'  e{i} [label="{",".join(map(str, e))}", shape=box];')
    for i, e in enumerate(H.edges):
        out += [f"  e{i} -- v{v};" for v in e]
    out.append("}")
    return "\n".join(out) + "\n"
