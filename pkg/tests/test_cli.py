import json

import pytest

import normgraph.builders as B
from normgraph import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_group_grammar():
    assert cli.parse_group("C:12").order == 12
    assert cli.parse_group("D:10").order == 10
    assert cli.parse_group("Q:16").order == 16
    assert cli.parse_group("S:4").order == 24
    assert cli.parse_group("Mod16").order == 16
    assert cli.parse_group("C3xQ8").order == 24
    assert cli.parse_group("TwoFrob294").order == 294
    assert cli.parse_group("prod(S3,C:2)").order == 12
    assert cli.parse_group("prod(prod(C2,C2),S3)").order == 24
    assert cli.parse_group("S4").order == 24  # catalog names work too
    with pytest.raises(cli.SpecError):
        cli.parse_group("X:5")
    with pytest.raises(cli.SpecError):
        cli.parse_group("prod(S3)")
    with pytest.raises(cli.SpecError):
        cli.parse_group("C:abc")


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "prod(S3,S3)", "--graph", "delta")
    assert code == 0
    payload = json.loads(out)
    assert payload["graphs"]["delta"]["strongly_connected"] is True
    assert payload["graphs"]["delta"]["diameter"] == 3
    assert payload["sizes"]["univ"] == 1


def test_analyze_deterministic(capsys):
    code1, out1, _ = run(capsys, "analyze", "S4", "--graph", "gamma")
    code2, out2, _ = run(capsys, "analyze", "S4", "--graph", "gamma")
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["classification"]["kind"] == "2-frobenius"


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "Mod16", "--graph", "gamma", "--format", "text")
    assert code == 0
    assert "univ=6" in out
    assert "complete(undirected)=True" in out


def test_analyze_file_round_trip(tmp_path, capsys):
    path = tmp_path / "s4.json"
    B.export_cayley(B.symmetric(4), path)
    code1, direct, _ = run(capsys, "analyze", "S4", "--graph", "delta")
    code2, ingested, _ = run(capsys, "analyze", f"file:{path}", "--graph", "delta")
    assert code1 == code2 == 0
    assert json.loads(direct) == json.loads(ingested)


def test_analyze_bad_spec_exits_2(capsys):
    code, _, err = run(capsys, "analyze", "Z99")
    assert code == 2
    assert "error" in err


def test_analyze_corrupt_table_exits_2(tmp_path, capsys):
    path = tmp_path / "corrupt.json"
    path.write_text(json.dumps({"name": "X", "order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 1, 0]]}))
    code, _, err = run(capsys, "analyze", f"file:{path}")
    assert code == 2
    assert "error" in err


def test_verify_single_group(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "paper", "--group", "C6")
    assert code == 0
    assert "statement coverage:" in out
    assert "fail=0" in out


def test_verify_json_reports_na_reasons(capsys):
    code, out, _ = run(capsys, "verify", "--group", "C6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["counts"]["fail"] == 0
    nas = [r for r in payload["results"] if r["verdict"] == "n/a"]
    assert nas and all(r["witness"]["reason"] for r in nas)
    assert any(row["status"].startswith("out-of-scope") for row in payload["coverage"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    from normgraph import checks

    bad = checks.Check("always-bad", "forced failure", lambda f, cfg: checks._fail(why="forced"))
    monkeypatch.setattr(checks, "REGISTRY", (bad,))
    code, out, _ = run(capsys, "verify", "--group", "C2")
    assert code == 1
    assert "FAILED always-bad" in out


def test_verify_requires_groups(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2
    assert "error" in err


def test_export_dot(tmp_path, capsys):
    out_path = tmp_path / "s3.dot"
    code, _, _ = run(capsys, "export-dot", "S3", "--graph", "delta", "--out", str(out_path))
    assert code == 0
    text = out_path.read_text()
    assert text.startswith("digraph")
    nodes = [ln for ln in text.splitlines() if ln.endswith('";') and "->" not in ln]
    assert len(nodes) == 5  # five vertices outside the universal set
    code, out, _ = run(capsys, "export-dot", "S3", "--graph", "udelta")
    assert code == 0
    assert "[dir=both]" in out


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert "TwoFrob294 (order 294)" in out
    assert "S4 (order 24)" in out


def test_console_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "normgraph", "analyze", "C:6", "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "order 6" in proc.stdout
