import io as _io
import json

from modsum.cli import main
from modsum.graph import cycle, petersen
from modsum.search import Kind, PropertySpec, min_modulus


def run(*argv):
    out = _io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_gen():
    code, out = run("gen", "--family", "petersen")
    assert code == 0
    assert json.loads(out) == petersen().to_json()
    code, out = run("gen", "--family", "complete_bipartite", "--size", "2", "--size2", "3")
    assert code == 0 and len(json.loads(out)["edges"]) == 6


def test_usage_errors_exit_3(capsys):
    assert run("gen", "--family", "cycle", "--size", "2")[0] == 3
    assert run("gen", "--family", "path", "--size", "0")[0] == 3
    assert run("gen", "--family", "path", "--bogus")[0] == 3
    assert run("frobnicate")[0] == 3


def test_verify(tmp_path):
    g = {"m": 2, "edges": [[0, 1]]}
    bad = write(tmp_path, "bad.json", {"graph": g, "n": 2, "labels": [[0], [0]]})
    code, out = run("verify", "--labeling", bad)
    assert code == 1
    assert json.loads(out) == {"injective": False, "clash": {"vertices": [0, 1], "label": [0]}}
    good = write(tmp_path, "good.json", {"graph": g, "n": 2, "labels": [[0], [1]]})
    assert run("verify", "--labeling", good) == (0, '{"injective": true}\n')
    assert run("verify", "--labeling", str(tmp_path / "missing.json"))[0] == 3
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert run("verify", "--labeling", str(broken))[0] == 3


def test_classify(tmp_path):
    lab = {"graph": {"m": 4, "edges": [[0, 1], [0, 2], [0, 3]]}, "n": 4, "labels": [[0, 1, 2, 3], [0], [1], [2]]}
    path = write(tmp_path, "star.json", lab)
    code, out = run("classify", "--labeling", path, "--json")
    rep = json.loads(out)
    assert code == 0 and rep["maximal"] and rep["weak_paper_form"]
    code, out = run("classify", "--labeling", path)
    assert code == 0 and "maximal: True" in out


def test_search_matches_min_modulus(tmp_path):
    path = write(tmp_path, "c4.json", cycle(4).to_json())
    code, out = run("search", "--spec", "weak", "--graph", path, "--n-max", "5")
    assert code == 0
    expected = min_modulus(cycle(4), PropertySpec(Kind.WEAK), n_max=5).to_json()
    assert json.loads(out) == expected
    assert json.loads(out)["value"] == 3


def test_search_exit_codes(tmp_path):
    path = write(tmp_path, "k6.json", {"m": 6, "edges": [[i, j] for i in range(6) for j in range(i + 1, 6)]})
    code, _ = run("search", "--spec", "strong", "--graph", path, "--n-max", "4", "--budget-nodes", "3")
    assert code == 2
    p4 = write(tmp_path, "p4.json", {"m": 4, "edges": [[0, 1], [1, 2], [2, 3]]})
    assert run("search", "--spec", "plain", "--graph", p4, "--n-max", "2")[0] == 1
    assert run("search", "--spec", "weak-k-uniform", "--graph", p4)[0] == 3


def test_export(tmp_path):
    lab = write(tmp_path, "l.json", {"graph": {"m": 2, "edges": [[0, 1]]}, "n": 2, "labels": [[0], [1]]})
    dot = tmp_path / "out.dot"
    assert run("export", "--labeling", lab, "--dot", str(dot))[0] == 0
    first = dot.read_bytes()
    assert b'0 -- 1 [label="{1}"]' in first
    run("export", "--labeling", lab, "--dot", str(dot))
    assert dot.read_bytes() == first


def test_audit(tmp_path):
    report = tmp_path / "audit.json"
    code, out = run("audit", "--claim", "CL-STR", "--claim", "CL-CD", "--max-modulus", "5", "--json", str(report))
    assert code == 0
    assert "== REFUTED (1)" in out and "CL-STR" in out
    data = json.loads(report.read_text())
    assert [c["claim_id"] for c in data["claims"]] == ["CL-CD", "CL-STR"]
    assert run("audit", "--claim", "CL-NOPE")[0] == 3
    code, out = run("audit", "--list")
    assert code == 0 and out.count("\n") == 29
