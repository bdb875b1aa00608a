import io
import json
import re
import subprocess
import sys

import pytest

from zdlab import harness
from zdlab.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def dot_parts(text):
    nodes = [line for line in text.splitlines() if re.match(r"\s*v\d+ \[label=", line)]
    edges = [line for line in text.splitlines() if " -- " in line]
    return nodes, edges


def test_analyze_z8():
    code, out = run(["analyze", "Z8", "--ideal", "4"])
    assert code == 0
    rows = dict(re.split(r"\s{2,}", line.strip(), maxsplit=1) for line in out.splitlines()[1:])
    assert rows["|R⋈I|"] == "16"
    assert rows["Γ̄(R⋈I) vertices"] == "7"
    assert rows["Γ̄(R⋈I) edges"] == "21"
    assert rows["Γ(R⋈I) edges"] == "15"
    assert rows["Γ̄(R⋈I) complete"] == "yes"
    assert rows["Γ(R⋈I) = Γ̄(R⋈I)"] == "no"
    assert rows["T3"] == "6"


def test_analyze_girth_inf():
    code, out = run(["analyze", "Z2", "--ideal", "1"])
    assert code == 0
    assert re.search(r"Γ̄\(R⋈I\) girth\s+inf", out)


def test_graph_dot_extended_and_classic():
    code, ext = run(["graph", "Z8", "--ideal", "4", "--kind", "extended", "--format", "dot"])
    assert code == 0
    code, cls = run(["graph", "Z8", "--ideal", "4", "--kind", "classic", "--format", "dot"])
    assert code == 0
    ext_nodes, ext_edges = dot_parts(ext)
    cls_nodes, cls_edges = dot_parts(cls)
    assert len(ext_nodes) == 7 and len(ext_edges) == 21
    assert ext_nodes == cls_nodes
    strip = lambda e: e.split(" [")[0].rstrip(";").strip()
    assert {strip(e) for e in cls_edges} < {strip(e) for e in ext_edges}
    assert ext.startswith("graph zdgraph {")
    assert any('witness="2,1"' in e for e in ext_edges)


def test_graph_json(tmp_path):
    path = tmp_path / "g.json"
    code, out = run(["graph", "Z8", "--ideal", "4", "--format", "json", "-o", str(path)])
    assert code == 0 and out == ""
    data = json.loads(path.read_text())
    assert data["kind"] == "extended"
    assert len(data["vertices"]) == 7 and len(data["edges"]) == 21
    assert "(2, 6)" in data["vertices"]


def test_graph_of_ring():
    code, out = run(["graph", "Z8", "--of", "ring", "--kind", "classic", "--format", "json"])
    data = json.loads(out)
    assert data["vertices"] == ["2", "4", "6"]
    assert len(data["edges"]) == 2


def test_graph_deterministic():
    argv = ["graph", "Z12", "--ideal", "2", "--format", "dot"]
    assert run(argv) == run(argv)


def test_verify_small_corpus(tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_text("Z2 ; 1\n")
    out_path = tmp_path / "r.json"
    code, _ = run(["verify", "--corpus", str(corpus), "-o", str(out_path)])
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["summary"]["instances"] == 1
    assert report["summary"]["inconsistent"] == 0


@pytest.mark.parametrize("argv", [
    ["analyze", "Q5"],
    ["analyze", "Z2[X,Y]/(X^2)"],
    ["analyze", "Z8", "--ideal", "Y"],
    ["graph", "Z8 x", "--ideal", "1"],
])
def test_parse_errors_exit_2(argv, capsys):
    code, _ = run(argv)
    assert code == 2
    assert "parse error" in capsys.readouterr().err


def test_verify_parse_error_exit_2(tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_text("Z4 ; 2\nZ4 ; Q\n")
    code, out = run(["verify", "--corpus", str(corpus)])
    assert code == 2
    assert json.loads(out)["summary"]["parse_errors"] == 1


@pytest.mark.parametrize("argv", [
    ["analyze", "Z8", "--ideal", "4", "--size-cap", "10"],
    ["--size-cap", "10", "analyze", "Z8", "--ideal", "4"],
    ["graph", "Z5000"],
])
def test_size_cap_exit_3(argv):
    assert run(argv)[0] == 3


def test_size_cap_can_be_raised():
    assert run(["--size-cap", "16", "analyze", "Z8", "--ideal", "4"])[0] == 0
    assert run(["analyze", "Z8", "--ideal", "4", "--size-cap", "16"])[0] == 0


def test_io_errors_exit_4(tmp_path):
    assert run(["verify", "--corpus", str(tmp_path / "missing.txt")])[0] == 4
    assert run(["graph", "Z8", "-o", str(tmp_path / "no" / "such" / "dir.dot")])[0] == 4


def test_inconsistent_exit_1(tmp_path, monkeypatch):
    def broken(inst):
        return harness.Verdict("test.broken", True, False, False)
    monkeypatch.setattr(harness, "CHECKERS", harness.CHECKERS + (broken,))
    corpus = tmp_path / "c.txt"
    corpus.write_text("Z4 ; 2\n")
    code, out = run(["verify", "--corpus", str(corpus)])
    assert code == 1
    assert json.loads(out)["summary"]["inconsistent"] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zdlab", "analyze", "Z4", "--ideal", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "instance: Z4 ; 2" in proc.stdout
