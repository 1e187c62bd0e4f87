import json

import pytest

from knesertw.cli import main
from knesertw.formats import canonical_bytes, emit_gr, parse_td
from knesertw.graph import complete_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_petersen(tmp_path, capsys):
    out = tmp_path / "p.gr"
    code, _, _ = run(capsys, "graph", "--n", "5", "--k", "2", "--t", "1", "-o", str(out))
    assert code == 0
    assert "p tw 10 15" in out.read_text().splitlines()
    first = out.read_bytes()
    run(capsys, "graph", "--n", "5", "--k", "2", "--t", "1", "-o", str(out))
    assert out.read_bytes() == first


def test_graph_k632_header(capsys):
    code, out, _ = run(capsys, "graph", "--n", "6", "--k", "3", "--t", "2")
    assert code == 0 and "p tw 20 100" in out.splitlines()


def test_graph_labels(tmp_path, capsys):
    labels = tmp_path / "labels.txt"
    run(capsys, "graph", "--n", "5", "--k", "2", "--t", "1", "--labels", str(labels))
    rows = labels.read_text().splitlines()
    assert rows[0] == "1 1 2" and rows[-1] == "10 4 5"


def test_graph_invalid(tmp_path, capsys):
    out = tmp_path / "bad.gr"
    code, _, err = run(capsys, "graph", "--n", "4", "--k", "3", "--t", "2", "-o", str(out))
    assert code == 2 and "n > 2k - t" in err
    assert not out.exists()


def test_graph_cap(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("KNESERTW_MAX_VERTICES", "10")
    code, _, err = run(capsys, "graph", "--n", "7", "--k", "3", "--t", "2")
    assert code == 2 and "cap" in err


def test_solve_and_validate(tmp_path, capsys):
    gr, td, rep = tmp_path / "p.gr", tmp_path / "p.td", tmp_path / "r.json"
    run(capsys, "graph", "--n", "5", "--k", "2", "--t", "1", "-o", str(gr))
    code, out, _ = run(capsys, "solve", str(gr), "--td", str(td), "--out", str(rep))
    assert code == 0 and "treewidth 4" in out
    code, out, _ = run(capsys, "validate", str(gr), str(td))
    assert code == 0 and "width 4" in out
    data = json.loads(rep.read_text())
    assert set(data) == {"version", "command", "params", "checks", "solver", "timings"}
    assert data["solver"]["treewidth"] == "4"


def test_solve_complete(tmp_path, capsys):
    gr = tmp_path / "k6.gr"
    gr.write_text(emit_gr(complete_graph(6)))
    code, out, _ = run(capsys, "solve", str(gr))
    assert code == 0 and "treewidth 5" in out


def test_solve_truncated(tmp_path, capsys):
    gr = tmp_path / "p.gr"
    run(capsys, "graph", "--n", "5", "--k", "2", "--t", "1", "-o", str(gr))
    gr.write_text(gr.read_text()[:40])
    code, _, _ = run(capsys, "solve", str(gr))
    assert code == 2


def test_solve_timeout(capsys):
    code, out, _ = run(capsys, "solve", "--n", "6", "--k", "3", "--t", "2", "--time-limit", "0")
    assert code == 3 and "timeout" in out


def test_validate_reports_violation(tmp_path, capsys):
    gr, td = tmp_path / "p.gr", tmp_path / "p.td"
    run(capsys, "graph", "--n", "5", "--k", "2", "--t", "1", "-o", str(gr))
    run(capsys, "solve", str(gr), "--td", str(td))
    lines = td.read_text().splitlines()
    # drop the last vertex of the first bag line
    idx = next(i for i, line in enumerate(lines) if line.startswith("b "))
    parts = lines[idx].split()
    lines[idx] = " ".join(parts[:-1])
    td.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "validate", str(gr), str(td))
    assert code in (1, 2)
    if code == 1:
        assert "uncovered edge" in out or "missing vertex" in out


def test_decompose_and_alpha(tmp_path, capsys):
    td = tmp_path / "s.td"
    code, out, _ = run(capsys, "decompose", "--n", "6", "--k", "3", "--t", "2", "-o", str(td))
    assert code == 0 and "width 15" in out
    parsed, n = parse_td(td.read_text())
    assert n == 20 and parsed.width == 15
    code, out, _ = run(capsys, "alpha", "--n", "5", "--k", "3", "--t", "2")
    assert code == 0 and "alpha 4" in out
    code, _, _ = run(capsys, "alpha", "--n", "8", "--k", "3", "--t", "2", "--cap", "40")
    assert code == 3


def test_separator(capsys):
    code, out, _ = run(capsys, "separator", "--n", "5", "--k", "2", "--t", "1")
    assert code == 0 and "size 4" in out
    code, _, _ = run(capsys, "separator", "--n", "5", "--k", "2", "--t", "1", "--p", "1/2")
    assert code == 2


def test_verify_thresholds(capsys, tmp_path):
    rep = tmp_path / "t.json"
    code, out, _ = run(capsys, "verify", "thresholds", "--c", "1..4", "--out", str(rep))
    assert code == 0
    for c, v in [(1, 12), (2, 54), (3, 195), (4, 626)]:
        assert f"K'({c}) = {v}" in out
    data = json.loads(rep.read_text())
    assert [c["lhs"] for c in data["checks"]] == ["12", "54", "195", "626"]


def test_verify_cases(capsys):
    code, out, _ = run(capsys, "verify", "cases", "--t", "2..24")
    assert code == 0 and out.strip().endswith("PASS")


def test_verify_sufficient_conditions_failure(capsys):
    code, out, _ = run(capsys, "verify", "theorem9", "--n", "5", "--k", "3", "--t", "2")
    assert code == 1 and "eqns1=FAIL" in out


def test_verify_bounds_is_informational(capsys):
    code, out, _ = run(capsys, "verify", "bounds", "--k", "3", "--t", "2")
    assert code == 0 and "weaker" in out


@pytest.mark.parametrize("argv", [["verify", "nope"], ["verify", "f", "--k", "5..2"], ["bogus"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_reports_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "verify", "cases", "--t", "2..30", "--horizon", "40", "--out", str(path))
    ja, jb = json.loads(a.read_text()), json.loads(b.read_text())
    assert canonical_bytes(ja) != b""
    # the command echo differs only through the output path
    ja["command"] = jb["command"] = None
    assert canonical_bytes(ja) == canonical_bytes(jb)
