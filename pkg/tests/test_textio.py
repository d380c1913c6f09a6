import pytest
from hypothesis import given, settings

from conftest import linear_hypergraphs
from linsat.constructions import t_prime
from linsat.errors import ParseError
from linsat.hypercore import build
from linsat.textio import format_text, incidence_dot, parse_text, read_hypergraph, shadow_dot, write_hypergraph


def test_header_fills_isolated_vertices():
    H = parse_text("p hg 9 3\n")
    assert H.n == 9 and H.m == 0 and H.k == 3


def test_comments_and_vertex_lines():
    H = parse_text("# a star\n0 1 2\n\n0 3 4\nv 7\n")
    assert H.vertices == {0, 1, 2, 3, 4, 7}
    assert H.edges == ((0, 1, 2), (0, 3, 4))


def test_format_sorted_with_isolated():
    H = build([0, 1, 2, 3, 4, 9], 3, [(2, 4, 3), (0, 1, 2)])
    assert format_text(H) == "p hg 6 3\nv 9\n0 1 2\n2 3 4\n"


@settings(max_examples=100, deadline=None)
@given(linear_hypergraphs(max_n=15, ks=(3, 4, 5)))
def test_round_trip(H):
    assert parse_text(format_text(H)) == H


def test_file_round_trip(tmp_path):
    H = t_prime()
    path = tmp_path / "tp.hg"
    write_hypergraph(H, path)
    assert read_hypergraph(path) == H


@pytest.mark.parametrize(
    "text, line",
    [
        ("0 1 2\n0 1 3\n", 2),
        ("0 1 2\n0 1\n", 2),
        ("0 1 x\n", 1),
        ("p hg 3\n", 1),
        ("0 1 2\np hg 3 3\n", 2),
        ("0 -1 2\n", 1),
        ("# c\n0 1 2\n3 4 5\n2 3 1\n", 4),
    ],
)
def test_errors_are_line_numbered(text, line):
    with pytest.raises(ParseError) as info:
        parse_text(text)
    assert info.value.line_no == line
    assert str(info.value).startswith(f"line {line}:")


def test_nonlinear_error_names_the_pair():
    with pytest.raises(ParseError) as info:
        parse_text("0 1 2\n0 1 3\n")
    assert "NotLinear" in str(info.value) and "[0, 1]" in str(info.value)


def test_header_too_small():
    with pytest.raises(ParseError):
        parse_text("p hg 2 3\n0 1 2\n")


def test_empty_input():
    with pytest.raises(ParseError):
        parse_text("# nothing\n")


def _dot_edges(dot):
    return [line for line in dot.splitlines() if " -- " in line]


def test_shadow_dot_provenance_groups():
    dot = shadow_dot(t_prime())
    lines = _dot_edges(dot)
    assert len(lines) == 12
    colors = {line.split("color=")[1].split(",")[0].split("]")[0] for line in lines}
    assert len(colors) == 4


def test_single_edge_exports():
    H = build(3, 3, [(0, 1, 2)])
    shadow = _dot_edges(shadow_dot(H))
    assert len(shadow) == 3
    incidence = _dot_edges(incidence_dot(H))
    assert len(incidence) == 3
    assert all("e0" in line for line in incidence)
