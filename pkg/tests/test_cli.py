import json

import pytest

from queendom.cli import main
from queendom.formats import dump_solution
from queendom.board import BoardSpec
from queendom.known import KNOWN


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_bounds(capsys):
    code, out = run(capsys, "bounds", "5", "--format", "json")
    doc = json.loads(out.out)
    assert code == 0 and doc["best_lb"] == 3 and doc["best_ub"] == 15
    code, out = run(capsys, "bounds", "7", "--format", "json")
    assert json.loads(out.out)["volume_lb"] == 5
    code, out = run(capsys, "bounds", "1")
    assert "1 <= gamma(Q3_1) <= 1" in out.out and "0.077" in out.out and "0.519" in out.out


def test_coverage(capsys):
    code, out = run(capsys, "coverage", "5", "--strata", "--format", "json")
    doc = json.loads(out.out)
    assert code == 0
    assert [doc["maxima"][t] for t in ("corner", "edge", "face", "interior")] == [3, 5, 11, 27]
    assert doc["full_core"] == [[2, 2, 2]]
    code, out = run(capsys, "coverage", "5", "--cell", "0,0,2", "--format", "json")
    assert json.loads(out.out)["kappa"] == 5
    code, out = run(capsys, "coverage", "3")
    assert code == 2 and "n >= 4" in out.err


def test_solve_writes_certificate(capsys, tmp_path):
    cert = tmp_path / "c.json"
    sol = tmp_path / "s.json"
    code, out = run(capsys, "solve", "4", "--out", str(cert), "--solution", str(sol))
    assert code == 0 and "= 4 (optimal)" in out.out
    assert json.loads(cert.read_text())["k"] == 4
    code, out = run(capsys, "verify", "--file", str(cert))
    assert code == 0
    code, out = run(capsys, "verify", "--file", str(sol))
    assert code == 0


def test_solve_n2(capsys):
    code, out = run(capsys, "solve", "2", "--format", "json")
    assert code == 0 and json.loads(out.out)["value"] == 1


def test_solve_limit_exit_code(capsys):
    code, out = run(capsys, "solve", "7", "--time-limit", "1", "--format", "json")
    doc = json.loads(out.out)
    assert code == 3 and doc["status"] == "limit" and doc["lower_bound"] >= 5
    assert doc["value"] <= 12


def test_verify_table_n7(capsys, tmp_path):
    f = tmp_path / "n7.json"
    f.write_text(dump_solution(BoardSpec(3, 7), KNOWN[7].placement))
    code, out = run(capsys, "verify", "--file", str(f))
    assert code == 0 and out.out.startswith("ok")


def test_verify_failure(capsys, tmp_path):
    f = tmp_path / "one.json"
    f.write_text(dump_solution(BoardSpec(3, 4), [(0, 0, 0)]))
    code, out = run(capsys, "verify", "--file", str(f))
    assert code == 1 and "(0,1,2)" in out.out
    code, out = run(capsys, "verify", "4", "--cells", "0,0,0")
    assert code == 1


def test_verify_claim_mismatch(capsys, tmp_path):
    f = tmp_path / "claim.json"
    f.write_text(dump_solution(BoardSpec(3, 3), [(1, 1, 1)], {"size": 2}))
    code, _ = run(capsys, "verify", "--file", str(f))
    assert code == 1


def test_verify_malformed(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"format": "q3d-solution-v1", "dim": 3}')
    code, out = run(capsys, "verify", "--file", str(f))
    assert code == 2 and "n" in out.err


def test_usage_error(capsys):
    code, _ = run(capsys, "solve")
    assert code == 2


def test_certify(capsys, tmp_path):
    out_path = tmp_path / "c4.json"
    code, _ = run(capsys, "certify", "4", "--k", "4", "--out", str(out_path))
    doc = json.loads(out_path.read_text())
    assert code == 0 and doc["budget"] == 3
    assert all(s["status"] == "infeasible" for s in doc["subproblems"])
    code, _ = run(capsys, "certify", "4", "--k", "5")
    assert code == 1


def test_export_and_import(capsys, tmp_path):
    lp = tmp_path / "q3.lp"
    code, _ = run(capsys, "export-lp", "3", "--out", str(lp))
    golden = (__import__("pathlib").Path(__file__).parent / "data" / "q3_n3.lp").read_text()
    assert code == 0 and lp.read_text() == golden
    assignment = tmp_path / "sol.txt"
    assignment.write_text("x_1_1_1 1\nx_0_0_0 0\n")
    code, out = run(capsys, "import-solution", "3", "--file", str(assignment))
    assert code == 0 and json.loads(out.out)["queens"] == [[1, 1, 1]]
    assignment.write_text("x_0_0_0 1\n")
    code, _ = run(capsys, "import-solution", "3", "--file", str(assignment))
    assert code == 1
    assignment.write_text("x_7_0_0 1\n")
    code, _ = run(capsys, "import-solution", "3", "--file", str(assignment))
    assert code == 2


def test_table(capsys):
    code, out = run(capsys, "table", "--max-n", "4", "--format", "json")
    rows = json.loads(out.out)["rows"]
    assert code == 0 and [r["upper"] for r in rows] == [1, 1, 1, 4]
    assert all(r["matches_known"] for r in rows)


def test_dim2_solve(capsys):
    code, out = run(capsys, "solve", "5", "--dim", "2", "--format", "json")
    assert code == 0 and json.loads(out.out)["value"] == 3
