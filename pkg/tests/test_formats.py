from __future__ import annotations

import io

import networkx as nx
import pytest
from hypothesis import given

from sombor.errors import Graph6Error, MalformedHeader, NonCanonicalPadding, TooLarge, TruncatedBits
from sombor.formats import (
    RecordError,
    iter_edgelist,
    iter_graph6,
    parse_graph6,
    read_graphs,
    write_edgelist,
    write_graph6,
)
from sombor.graph import complete, empty, from_edge_list, path

from test_graph import graphs


@pytest.mark.parametrize("g,code", [
    (complete(2), "A_"),
    (empty(1), "@"),
    (path(4), "Ch"),
    (complete(4), "C~"),
])
def test_known_codes(g, code):
    assert write_graph6(g) == code
    assert parse_graph6(code) == g


@given(graphs(max_n=12))
def test_roundtrip(g):
    assert parse_graph6(write_graph6(g)) == g


@given(graphs(max_n=10))
def test_matches_networkx_encoder(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    assert write_graph6(g) == nx.to_graph6_bytes(G, header=False).decode().strip()


def test_atlas_roundtrip(atlas):
    assert len(atlas) == 1252
    for g in atlas:
        assert parse_graph6(write_graph6(g)) == g


@pytest.mark.parametrize("code,exc", [
    ("", MalformedHeader),
    (" ", MalformedHeader),
    ("~??", TooLarge),
    ("C", TruncatedBits),
    ("A`", NonCanonicalPadding),
    ("A__", Graph6Error),
    ("C!", Graph6Error),
])
def test_malformed(code, exc):
    with pytest.raises(exc):
        parse_graph6(code)


def test_write_too_large():
    with pytest.raises(TooLarge):
        write_graph6(empty(63))


def test_record_error_names_line():
    lines = ["A_", ">>graph6<<Ch", "", "C"]
    with pytest.raises(RecordError) as info:
        list(iter_graph6(lines))
    assert info.value.lineno == 4 and "line 4" in str(info.value)


def test_edgelist_roundtrip():
    text = write_edgelist(path(4)) + "# comment\n" + write_edgelist(complete(3))
    got = read_graphs(io.StringIO(text), "edgelist")
    assert got == [path(4), complete(3)]


@pytest.mark.parametrize("text,line", [
    ("3 2\n0 1\n", 2),
    ("3 1\n0 0\n", 2),
    ("x y\n", 1),
    ("2 1\n0 1 2\n", 2),
])
def test_edgelist_errors(text, line):
    with pytest.raises(RecordError) as info:
        list(iter_edgelist(io.StringIO(text)))
    assert info.value.lineno == line


def test_edgelist_reports_header_line():
    text = "\n2 1\n0 1\n"
    assert [ln for ln, _ in iter_edgelist(io.StringIO(text))] == [2]
    assert from_edge_list(2, [(0, 1)]) == next(iter_edgelist(io.StringIO(text)))[1]
