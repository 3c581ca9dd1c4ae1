import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modsum import io
from modsum.errors import InvalidInput, ParseError
from modsum.graph import Graph, enumerate_graphs, path, star
from modsum.labeling import Labeling, classify


def test_parse_graph_examples():
    assert io.parse_graph('{"m":2,"edges":[[0,1]]}') == path(2)
    assert io.parse_graph('{"m":2,"edges":[[1,0],[0,1]]}') == path(2)
    with pytest.raises(InvalidInput) as exc:
        io.parse_graph('{"m":2,"edges":[[0,0]]}')
    assert not isinstance(exc.value, ParseError)


@pytest.mark.parametrize(
    "text, field",
    [
        ('{"edges": []}', "m"),
        ('{"m": 2}', "edges"),
        ('{"m": "2", "edges": []}', "m"),
        ('{"m": 2, "edges": [[0]]}', "edges"),
        ('{"m": 2, "edges": [[0, true]]}', "edges[0][1]"),
    ],
)
def test_parse_graph_schema_errors(text, field):
    with pytest.raises(ParseError) as exc:
        io.parse_graph(text)
    assert exc.value.field == field


def test_parse_error_reports_line():
    with pytest.raises(ParseError) as exc:
        io.parse_graph('{\n  "m": 2,\n  "edges": [[0, 1],]\n}')
    assert exc.value.line == 3


def test_labeling_errors():
    g = path(2).to_json()
    with pytest.raises(ParseError):
        io.parse_labeling(json.dumps({"graph": g, "n": 0, "labels": [[0], [1]]}))
    with pytest.raises(ParseError):
        io.parse_labeling(json.dumps({"graph": g, "n": 2, "labels": [0, 1]}))
    with pytest.raises(InvalidInput):
        io.parse_labeling(json.dumps({"graph": g, "n": 2, "labels": [[0], [2]]}))
    with pytest.raises(InvalidInput):
        io.parse_labeling(json.dumps({"graph": g, "n": 2, "labels": [[0]]}))


def test_graph_round_trip_exhaustive():
    for m in range(0, 5):
        for g in enumerate_graphs(m):
            assert io.parse_graph(io.dumps(io.graph_to_json(g))) == g


@st.composite
def labelings(draw):
    m = draw(st.integers(1, 6))
    n = draw(st.integers(1, 8))
    edges = draw(st.sets(st.tuples(st.integers(0, m - 1), st.integers(0, m - 1)).filter(lambda e: e[0] != e[1])))
    masks = [draw(st.integers(1, (1 << n) - 1)) for _ in range(m)]
    return Labeling.from_masks(Graph(m, edges), n, masks)


@given(labelings())
def test_labeling_round_trip(lab):
    text = io.dumps(io.labeling_to_json(lab))
    assert io.parse_labeling(text) == lab
    assert "." not in text  # integers only


def test_emit_dot():
    lab = Labeling.from_lists(path(2), 2, [[0], [1]])
    assert '0 -- 1 [label="{1}"]' in io.emit_dot(lab)
    k13 = Labeling.from_lists(star(3), 4, [[0, 1, 2, 3], [0], [1], [2]])
    assert classify(k13).maximal
    dot = io.emit_dot(k13)
    assert dot.count('[label="{0,1,2,3}"]') == 4  # center plus three edges
    assert all('label="{0,1,2,3}"' in line for line in dot.splitlines() if "--" in line)
    assert io.emit_dot(k13) == dot
    with pytest.raises(InvalidInput):
        io.emit_dot(Labeling.from_lists(path(2), 2, [[0], [0]]))


def test_graph_to_dot():
    assert io.graph_to_dot(path(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"
