from __future__ import annotations

import json

import pytest
from hypothesis import given

from homlab.errors import Graph6Error
from homlab.graph import Graph, complete_graph, cycle_graph, empty_graph
from homlab.graph6 import (
    emit_graph6,
    graph_from_json,
    graph_to_json,
    load_graph,
    parse_graph6,
    read_graphs,
)

from conftest import graphs


def test_hand_decoded_codes():
    assert parse_graph6("@") == empty_graph(1)
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6("?") == empty_graph(0)


def test_hand_packed_c4():
    # column-wise bits x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1 -> 45 + 63 = 'l'
    assert emit_graph6(cycle_graph(4)) == "Cl"
    assert emit_graph6(complete_graph(2)) == "A_"
    assert emit_graph6(empty_graph(1)) == "@"


def test_header_and_long_size_form():
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)
    # 4-byte size form for n = 2
    assert parse_graph6("~??A_") == complete_graph(2)


@pytest.mark.parametrize("code, offset", [
    ("A", 1),        # truncated body
    ("A_?", 2),      # trailing byte
    ("A`", 1),       # padding bit set
    ("A\x7f", 1),    # byte above 126
    ("A!", 1),       # byte below 63
])
def test_errors_name_offsets(code, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(code)
    assert info.value.offset == offset


def test_empty_string_rejected():
    with pytest.raises(Graph6Error):
        parse_graph6("")


def test_emit_rejects_large():
    with pytest.raises(Graph6Error):
        emit_graph6(empty_graph(63))


@given(graphs(max_n=10))
def test_roundtrip(g):
    code = emit_graph6(g)
    assert parse_graph6(code) == g
    assert emit_graph6(parse_graph6(code)) == code


@given(graphs(max_n=8))
def test_json_roundtrip(g):
    assert graph_from_json(json.loads(json.dumps(graph_to_json(g)))) == g


def test_bad_json():
    with pytest.raises(ValueError):
        graph_from_json({"edges": []})


def test_read_and_load(tmp_path):
    p = tmp_path / "two.g6"
    p.write_text("A_\nCl\n")
    assert read_graphs(p) == [complete_graph(2), cycle_graph(4)]
    j = tmp_path / "g.json"
    j.write_text(json.dumps({"n": 3, "edges": [[0, 1]]}))
    assert load_graph(str(j)) == Graph(3, [(0, 1)])
    assert load_graph("K4") == complete_graph(4)
    assert load_graph("Cl") == cycle_graph(4)
    with pytest.raises(ValueError):
        load_graph(str(p))  # two graphs in one file
    with pytest.raises(ValueError):
        load_graph("not a graph!!")
