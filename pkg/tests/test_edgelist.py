import pytest
from hypothesis import given

from kcover.edgelist import load_edge_list, read_graph, save_edge_list, write_graph
from kcover.errors import (
    DuplicateEdgeError,
    EdgeListParseError,
    SelfLoopError,
    VertexRangeError,
)
from kcover.graph import Graph

from .conftest import graphs, path


def test_load_path():
    assert load_edge_list("3 2\n0 1\n1 2") == path(3)


def test_save_complete_is_sorted():
    assert save_edge_list(Graph.complete(3)) == "3 3\n0 1\n0 2\n1 2"


def test_isolated_vertices_survive():
    g = Graph.from_edges(6, [(4, 1)])
    text = save_edge_list(g)
    assert text == "6 1\n1 4"
    assert load_edge_list(text) == g


@pytest.mark.parametrize(
    "text, kind",
    [
        ("2 1\n0 0", SelfLoopError),
        ("3 2\n0 1\n1 0", DuplicateEdgeError),
        ("3 1\n0 3", VertexRangeError),
        ("3 1\n-1 2", VertexRangeError),
        ("3 1\n0 x", EdgeListParseError),
        ("3 2\n0 1", EdgeListParseError),
        ("3\n", EdgeListParseError),
        ("", EdgeListParseError),
        ("0 0", EdgeListParseError),
    ],
)
def test_load_errors(text, kind):
    with pytest.raises(kind):
        load_edge_list(text)


def test_error_kinds_are_distinct():
    kinds = {SelfLoopError, DuplicateEdgeError, VertexRangeError, EdgeListParseError}
    for a in kinds:
        for b in kinds - {a}:
            assert not issubclass(a, b)


def test_error_reports_line():
    with pytest.raises(SelfLoopError, match="line 3"):
        load_edge_list("3 2\n0 1\n2 2")


@given(graphs(max_n=15))
def test_roundtrip(g):
    assert load_edge_list(save_edge_list(g)) == g


def test_file_roundtrip(tmp_path):
    g = path(7)
    write_graph(g, tmp_path / "g.txt")
    assert read_graph(tmp_path / "g.txt") == g
