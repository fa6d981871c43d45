import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("NILGRAPH_CLI", "nilgraph")


def run(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, timeout=600
    )


def ok(*args, stdin=None):
    p = run(*args, stdin=stdin)
    assert p.returncode == 0, p.stderr
    return p.stdout


def test_analyze_f7():
    r = json.loads(ok("analyze", "fixture:f7"))
    assert r["nilpotent"] is False
    assert r["pe"] is False
    assert r["graphs"]["lower"]["edge_count"] == 0
    assert r["witness"]["x"] != r["witness"]["y"]


def test_analyze_s18():
    r = json.loads(ok("analyze", "fixture:s18"))
    assert r["graphs"]["upper"]["edge_count"] == 0
    assert r["pe"] is True
    assert r["nilpotent"] is False


def test_analyze_trivial_from_stdin():
    r = json.loads(ok("analyze", "-", stdin="1\n0\n"))
    assert r["structure"]["commutative"] is True
    assert r["nilpotency_class"] == 1


def test_analyze_text():
    out = ok("analyze", "fixture:f7", "--format", "text")
    assert "nilpotent: no" in out


def test_graph_c3_dot():
    out = ok("graph", "fixture:c3_table", "--kind", "upper")
    assert out.startswith("graph upper {")
    assert out.count(" -- ") == 3


def test_graph_f7_lower_json(tmp_path):
    path = tmp_path / "g.json"
    ok("graph", "fixture:f7", "--kind", "lower", "--out", "json", "-o", str(path))
    g = json.loads(path.read_text())
    assert g["order"] == 7
    assert g["edges"] == []


def test_graph_commutative_input_is_empty():
    for kind in ("upper", "lower", "noncommuting"):
        g = json.loads(ok("graph", "fixture:chain4", "--kind", kind, "--out", "json"))
        assert g["edges"] == []


def test_enumerate_and_round_trip(tmp_path):
    r = json.loads(ok("enumerate", "--order", "4", "--modulo", "isoanti", "--emit", str(tmp_path)))
    assert r["count"] == 126
    assert sum(r["per_graph_histogram"].values()) == 126
    files = sorted(tmp_path.iterdir())
    assert len(files) == 126
    assert files[0].name == "00000.txt"
    text = files[57].read_text()
    assert text.startswith("4\n")
    again = ok("analyze", str(files[57]))
    assert json.loads(again)["order"] == 4


def test_enumerate_limits():
    assert run("enumerate", "--order", "6").returncode == 2
    assert run("enumerate", "--order", "9").returncode == 2


def test_realize():
    assert ok("realize", "--graph", "p4", "--order", "4").strip() == "none"
    table = ok("realize", "--graph", '{"order": 3, "edges": [[0, 1], [1, 2], [0, 2]]}',
               "--order", "3")
    assert table.startswith("3\n")


def test_realize_mismatched_order():
    assert run("realize", "--graph", "p4", "--order", "5").returncode == 2


def test_verify_paper_fast():
    p = run("verify-paper", "--level", "fast")
    assert p.returncode == 0, p.stdout
    r = json.loads(p.stdout)
    assert r["ok"] is True
    assert r["level"] == "fast"


def test_export_fixtures(tmp_path):
    ok("export-fixtures", "--out", str(tmp_path))
    names = {f.stem for f in tmp_path.iterdir()}
    for n in ("f7", "s18", "t19", "fig2_left", "fig2_right", "c3", "c4",
              "p4_induced_5", "isolated_b"):
        assert n in names
    r = json.loads(ok("analyze", str(tmp_path / "f7.txt")))
    assert r["order"] == 7


def test_not_associative_error(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n1 0\n0 0\n")
    p = run("analyze", str(path))
    assert p.returncode == 2
    err = json.loads(p.stderr)
    assert err["error"] == "NotAssociative"
    assert err["triple"] == [0, 0, 1]


def test_parse_error_position():
    p = run("analyze", "-", stdin="2\n0 x\n1 1\n")
    assert p.returncode == 2
    err = json.loads(p.stderr)
    assert err["error"] == "ParseError"
    assert (err["line"], err["column"]) == (2, 3)


@pytest.mark.parametrize("args", [
    ("analyze", "/nonexistent/table.txt"),
    ("analyze", "fixture:nope"),
    ("bogus",),
    ("graph", "fixture:f7", "--kind", "sideways"),
])
def test_input_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_checked_in_fixtures_are_current(tmp_path):
    ok("export-fixtures", "--out", str(tmp_path))
    repo = Path(__file__).resolve().parents[2] / "fixtures"
    for f in tmp_path.iterdir():
        assert (repo / f.name).read_text() == f.read_text(), f.name
