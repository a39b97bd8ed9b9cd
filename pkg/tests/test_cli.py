import json
import subprocess
import sys

import pytest

from sccgraph import cli, verify


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_dot(capsys, tmp_path):
    path = tmp_path / "a5.dot"
    code, _, _ = run(capsys, "build", "--group", "alternating:5", "--relation", "solvable",
                     "--mode", "class", "--format", "dot", "--out", str(path), "--threads", "1")
    assert code == 0
    text = path.read_text()
    assert text.count("[label=") == 4 and text.count(" -- ") == 4


def test_build_empty_graph(capsys):
    code, out, _ = run(capsys, "build", "--group", "cyclic:1")
    assert code == 0 and out == 'graph "solvable/class cyclic:1" {\n}\n'


def test_build_bad_spec(capsys):
    code, out, err = run(capsys, "build", "--group", "psl2:6")
    assert code == 2 and out == "" and "prime power" in err


def test_build_budget(capsys):
    code, _, err = run(capsys, "build", "--group", "symmetric:9", "--max-order", "1000")
    assert code == 3 and "budget" in err


def test_build_unwritable(capsys, tmp_path):
    code, _, _ = run(capsys, "build", "--group", "symmetric:3", "--out",
                     str(tmp_path / "missing" / "x.dot"))
    assert code == 2


def test_build_formats_and_identity(capsys):
    code, out, _ = run(capsys, "build", "--group", "symmetric:3", "--mode", "expanded",
                       "--exclude-identity", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["vertices"]) == 5 and data["include_identity"] is False
    code, out, _ = run(capsys, "build", "--group", "symmetric:3", "--format", "graphml")
    assert code == 0 and out.startswith("<?xml")


def test_bad_arguments(capsys):
    assert run(capsys, "build")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "build", "--group", "cyclic:3", "--relation", "cyclic")[0] == 2
    assert run(capsys, "build", "--group", "cyclic:3", "--threads", "0")[0] == 2


def test_metrics_a5(capsys):
    code, out, _ = run(capsys, "metrics", "--group", "alternating:5")
    assert code == 0
    assert "girth: 3" in out and "clique_number: 3" in out and "diameter: 2" in out
    assert "domination_number: 1" in out and "dominant_names: [2a]" in out


def test_metrics_json_s3(capsys):
    code, out, _ = run(capsys, "metrics", "--group", "symmetric:3", "--json")
    data = json.loads(out)
    assert code == 0 and data["is_complete"] is True and data["diameter"] == 1


def test_metrics_a5_squared(capsys):
    code, out, _ = run(capsys, "metrics", "--group", "product:(alternating:5)x(alternating:5)",
                       "--json")
    assert code == 0 and json.loads(out)["diameter"] <= 2


def test_verify_c10(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "C10")
    assert code == 0
    assert "types C1, C2, C3, S3" in out


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "--suite", "NOPE")
    assert code == 2 and "NOPE" in err


def test_verify_failure_exit_1(capsys, monkeypatch):
    monkeypatch.setattr(verify, "is_complete", lambda g: True)
    code, out, _ = run(capsys, "verify", "--suite", "C1")
    assert code == 1 and "fail" in out and "witness" in out


def test_verify_corpus_and_json(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# small\nsymmetric:3\ncyclic:4\n")
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "C1,C15", "--corpus", str(corpus),
                       "--json", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert data["corpus"] == ["cyclic:4", "symmetric:3"]
    assert [c["id"] for c in data["checks"]] == ["C1", "C15"]


def test_verify_bad_corpus(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("symmetric:3\npsl2:6\n")
    code, _, err = run(capsys, "verify", "--suite", "C1", "--corpus", str(corpus))
    assert code == 2 and "line 2" in err


def test_verify_budget_skip_exit_0(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("alternating:5\n")
    code, out, _ = run(capsys, "verify", "--suite", "C1", "--corpus", str(corpus),
                       "--max-order", "10")
    assert code == 0 and "skipped" in out


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--group", "symmetric:3", "--left", "solvable/expanded",
                       "--right", "solvable/element")
    assert code == 0 and "verdict: equal" in out
    code, out, _ = run(capsys, "compare", "--group", "alternating:5",
                       "--left", "nilpotent/expanded", "--right", "solvable/expanded")
    assert code == 0
    assert "left is a spanning subgraph of right" in out
    assert "0 only in left, 660 only in right" in out
    assert "witness only in right" in out


def test_compare_errors(capsys):
    assert run(capsys, "compare", "--group", "alternating:5", "--right-group", "psl2:4",
               "--left", "solvable/class", "--right", "solvable/class")[0] == 2
    assert run(capsys, "compare", "--group", "alternating:5", "--left", "solvable/class",
               "--right", "solvable/expanded")[0] == 2
    assert run(capsys, "compare", "--group", "alternating:5", "--left", "solvable",
               "--right", "solvable/class")[0] == 2


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "named:M10\t720" in out and len(out.splitlines()) == 57
    code, out, _ = run(capsys, "catalog", "--show", "psl2:7")
    assert code == 0 and "order: 168" in out and "classes: 6" in out
    code, out, _ = run(capsys, "catalog", "--show", "alternating:4", "--format", "perm")
    assert code == 0 and out.startswith("perm 4")
    code, out, _ = run(capsys, "catalog", "--show", "cyclic:3", "--format", "table")
    assert out == "3\n0 1 2\n1 2 0\n2 0 1\n"
    assert run(capsys, "catalog", "--show", "cyclic:3", "--format", "perm")[0] == 2


def test_threads_byte_identical(capsys):
    outs = []
    for threads in ("1", "4"):
        code, out, _ = run(capsys, "build", "--group", "psl2:11", "--mode", "expanded",
                           "--format", "json", "--threads", threads)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sccgraph", "build", "--group", "symmetric:3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "0 -- 1;" in proc.stdout
