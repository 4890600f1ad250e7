import json

import pytest
from hypothesis import given

from irreg.corpus import default_corpus
from irreg.graph import complete_graph, path_graph
from irreg.io import (ParseError, emit_dimacs, emit_graph, parse_certificate, parse_graph,
                      parse_name_map, read_graph)

from strategies import graphs


def test_parse_examples():
    assert parse_graph("3 2\n0 1\n1 2") == path_graph(3)
    with pytest.raises(ParseError, match="self-loop"):
        parse_graph("2 1\n0 0")
    assert parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == complete_graph(3)


@pytest.mark.parametrize("text,bad", [
    ("", "header"),
    ("3 1\n0 1 2\n", "two fields"),
    ("3 2\n0 1\n", "promises"),
    ("3 1\n0 5\n", "range"),
    ("3 2\n0 1\n1 0\n", "duplicate"),
    ("x y\n", "integers"),
    ("p edge 3 1\ne 1\n", "e u v"),
    ("e 1 2\np edge 3 1\n", "before"),
])
def test_parse_errors(text, bad):
    with pytest.raises(ParseError, match=bad):
        parse_graph(text)


def test_error_carries_line():
    with pytest.raises(ParseError) as info:
        parse_graph("# c\n3 2\n0 1\n1 1\n")
    assert info.value.line == 4


def test_read_by_suffix(tmp_path):
    p = tmp_path / "g.col"
    p.write_text(emit_dimacs(path_graph(4)))
    assert read_graph(p) == path_graph(4)


def test_name_map():
    v, e = parse_name_map("a\t0\nb\t1\nab\t0\t1\n")
    assert v == {"a": 0, "b": 1} and e == {"ab": (0, 1)}
    with pytest.raises(ParseError):
        parse_name_map("a\t0\t1\t2\n")


def test_certificates():
    assert parse_certificate(json.dumps({"target": "edge", "certificate": [[0, 1]]})) == ("edge", [(0, 1)])
    assert parse_certificate("[3, 1]") == ("vertex", [3, 1])
    assert parse_certificate("[[0, 1]]") == ("edge", [(0, 1)])
    assert parse_certificate("0 2\n4\n") == ("vertex", [0, 2, 4])
    assert parse_certificate("0 2\n", "edge") == ("edge", [(0, 2)])
    assert parse_certificate("", "vertex") == ("vertex", [])
    with pytest.raises(ParseError):
        parse_certificate("0 1 2\n", "edge")


def test_corpus_round_trip():
    for _, g in default_corpus():
        assert parse_graph(emit_graph(g)) == g
        assert parse_graph(emit_dimacs(g)) == g


@given(graphs(max_n=12))
def test_round_trip(g):
    assert parse_graph(emit_graph(g, "c")) == g
    assert parse_graph(emit_dimacs(g)) == g
