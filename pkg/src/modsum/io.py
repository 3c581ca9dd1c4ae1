"""JSON and DOT serialization of graphs and labelings.

Graph JSON:    {"m": 4, "edges": [[0, 1], [1, 2]]}
Labeling JSON: {"graph": <graph JSON>, "n": 4, "labels": [[0], [1, 2], ...]}
"""

from __future__ import annotations

import json

from .errors import InvalidInput, ParseError
from .graph import Graph
from .labeling import Labeling, is_injective_labeling
from .zn import ZnSet


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _load(text):
    if not isinstance(text, str):
        return text
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line=exc.lineno) from None


def _int(value, fld):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"expected an integer, got {value!r}", field=fld)
    return value


def graph_to_json(g: Graph) -> dict:
    return g.to_json()


def graph_from_json(obj) -> Graph:
    if not isinstance(obj, dict):
        raise ParseError("graph must be a JSON object")
    for key in ("m", "edges"):
        if key not in obj:
            raise ParseError("missing key", field=key)
    m = _int(obj["m"], "m")
    if m < 0:
        raise ParseError("vertex count must be non-negative", field="m")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise ParseError("expected a list of [u, v] pairs", field="edges")
    pairs = []
    for i, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"edge {i} is not a [u, v] pair", field="edges")
        pairs.append((_int(e[0], f"edges[{i}][0]"), _int(e[1], f"edges[{i}][1]")))
    return Graph(m, pairs)


def parse_graph(text) -> Graph:
    """Parse graph JSON; reversed and duplicate edges are normalised, self-loops rejected."""
    return graph_from_json(_load(text))


def labeling_to_json(lab: Labeling) -> dict:
    return {
        "graph": lab.graph.to_json(),
        "n": lab.modulus,
        "labels": [list(s.members) for s in lab.labels],
    }


def labeling_from_json(obj) -> Labeling:
    if not isinstance(obj, dict):
        raise ParseError("labeling must be a JSON object")
    for key in ("graph", "n", "labels"):
        if key not in obj:
            raise ParseError("missing key", field=key)
    g = graph_from_json(obj["graph"])
    n = _int(obj["n"], "n")
    if n < 1:
        raise ParseError("modulus must be positive", field="n")
    labels = obj["labels"]
    if not isinstance(labels, list):
        raise ParseError("expected a list of residue lists", field="labels")
    sets = []
    for v, members in enumerate(labels):
        if not isinstance(members, list):
            raise ParseError(f"label {v} is not a list", field="labels")
        sets.append(ZnSet.from_members(n, [_int(x, f"labels[{v}]") for x in members]))
    return Labeling(g, n, tuple(sets))


def parse_labeling(text) -> Labeling:
    return labeling_from_json(_load(text))


def zn_set_from_json(obj) -> ZnSet:
    return ZnSet.from_json(_load(obj))


def graph_to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.vertex_count)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(lab: Labeling) -> str:
    """Undirected DOT with vertex labels and induced edge labels as brace lists."""
    ok, clash = is_injective_labeling(lab)
    if not ok:
        raise InvalidInput(f"vertices {clash[0]} and {clash[1]} share a label")
    lines = ["graph G {"]
    for v, s in enumerate(lab.labels):
        lines.append(f'  {v} [label="{s}"];')
    for (u, v), s in lab.edge_labels().items():
        lines.append(f'  {u} -- {v} [label="{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
