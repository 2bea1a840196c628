import networkx as nx
import pytest

from conftest import from_nx
from smallminors import generators
from smallminors.errors import FormatError
from smallminors.graph import Graph, KtModel
from smallminors.io import (
    format_certificate,
    format_edge_list,
    format_embedding,
    parse_certificate,
    parse_edge_list,
    parse_embedding,
)


def test_edge_list_round_trip():
    g = from_nx(nx.petersen_graph())
    back = parse_edge_list(format_edge_list(g))
    assert sorted(back.edges()) == sorted(g.edges())


def test_edge_list_relabels_sparse_ids():
    g = Graph.from_edges([(10, 20), (20, 30)])
    text = format_edge_list(g)
    assert text.splitlines()[0] == "3 2"
    assert parse_edge_list(text).n == 3


def test_edge_list_comments_and_isolated_vertices():
    g = parse_edge_list("# triangle plus an isolated vertex\n4 3\n0 1\n1 2\n2 0\n")
    assert (g.n, g.m) == (4, 3)


@pytest.mark.parametrize(
    "text,message",
    [
        ("", "empty"),
        ("3 1\n0 1\n1 2\n", "promises"),
        ("3 1\n0 5\n", "out of range"),
        ("3 1\n1 1\n", "self-loop"),
        ("3 2\n0 1\n1 0\n", "parallel"),
        ("3 1\n0 x\n", "integers"),
        ("3\n", "header"),
    ],
)
def test_malformed_edge_lists(text, message):
    with pytest.raises(FormatError, match=message):
        parse_edge_list(text)


def test_embedding_round_trip(snub):
    back = parse_embedding(format_embedding(snub))
    assert back.genus == 0
    assert back.rotation == snub.rotation


def test_signed_embedding_round_trip():
    k4 = generators.plane_embedding(nx.complete_graph(4))
    from smallminors.embedded import EmbeddedGraph

    twisted = EmbeddedGraph(k4.graph, k4.rotation, {(0, 1): -1})
    text = format_embedding(twisted)
    assert "-" in text
    back = parse_embedding(text)
    assert back.genus == 1 and back.sign(0, 1) == -1


def test_embedding_errors():
    with pytest.raises(FormatError, match="genus"):
        parse_embedding("3 3 2\n0: 1 2\n1: 2 0\n2: 0 1\n")
    with pytest.raises(FormatError, match="symmetric"):
        parse_embedding("3 2\n0: 1 2\n1: 0\n2: 1\n")
    with pytest.raises(FormatError, match="sign"):
        parse_embedding("3 3\n0: 1- 2\n1: 2 0\n2: 0 1\n")


def test_certificate_round_trip():
    model = KtModel([[0, 1], [2], [5, 4], [3]])
    text = format_certificate(model, {"op": "k4", "n": 6})
    back, meta = parse_certificate(text)
    assert back.branch_sets == model.branch_sets
    assert meta == {"op": "k4", "n": "6"}


def test_certificate_errors():
    with pytest.raises(FormatError, match="header"):
        parse_certificate("k 4\n0\n1\n")
    with pytest.raises(FormatError, match="branch sets"):
        parse_certificate("t 3 size 2\n0\n1\n")
    with pytest.raises(FormatError, match="size"):
        parse_certificate("t 2 size 5\n0\n1\n")
