"""
Tests for the command-line surface.
"""
import json
from pathlib import Path

import pytest

from qappell.application.services.verification_service import VerificationService

GOLDEN = Path(__file__).parent / "golden"


def run(app, capsys, *argv):
    code = app.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_json_matches_golden(app, capsys):
    code, out, _ = run(app, capsys, "table", "--family", "custom", "--base", "1", "--n", "3",
                       "--q", "1/2", "--u", "1/2")
    assert code == 0
    assert out == (GOLDEN / "table_custom_base1_n3.json").read_text()


def test_table_csv_matches_golden(app, capsys):
    code, out, _ = run(app, capsys, "table", "--family", "bernoulli", "--alpha", "1", "--n", "1",
                       "--q", "1/2", "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / "table_bernoulli_n1.csv").read_text()


def test_verify_matches_golden(app, capsys):
    code, out, _ = run(app, capsys, "verify", "--suite", "leibniz", "--leibniz-pairs", "3",
                       "--grid", str(GOLDEN / "grid_small.json"))
    assert code == 0
    assert out == (GOLDEN / "verify_leibniz_small_grid.json").read_text()


def test_table_output_is_deterministic(app, capsys):
    argv = ["table", "--family", "euler", "--n", "4", "--q", "2/3", "--u", "3", "--vars", "xyz"]
    first = run(app, capsys, *argv)
    second = run(app, capsys, *argv)
    assert first[:2] == second[:2]
    assert json.loads(first[1])["polynomial"] == "Q_4(x,y,z;u)"


def test_table_bivariate_and_quasi(app, capsys):
    code, out, _ = run(app, capsys, "table", "--family", "custom", "--base", "1", "--n", "2", "--vars", "xy")
    assert code == 0
    assert json.loads(out)["polynomial"] == "P_2(x,y;u)"
    code, out, _ = run(app, capsys, "table", "--family", "custom", "--base", "1", "--n", "2", "--vars", "xy",
                       "--quasi")
    assert code == 0
    assert json.loads(out)["terms"] == [{"c": "1", "e": [2, 0, 0, 0, 0]}]


def test_table_from_descriptor_file(app, capsys, tmp_path):
    descriptor = tmp_path / "family.json"
    descriptor.write_text(json.dumps({"kind": "custom", "alpha": 2, "base": ["1", "1"]}))
    code, out, _ = run(app, capsys, "table", "--family", "custom", "--custom", str(descriptor), "--n", "1")
    assert code == 0
    assert json.loads(out)["family"]["alpha"] == 2
    assert json.loads(out)["family"]["a"] == ["1", "2"]


def test_eval(app, capsys):
    code, out, _ = run(app, capsys, "eval", "--family", "bernoulli", "--n", "1", "--q", "1/2", "--at", "x=0")
    assert (code, out) == (0, "-2/3\n")
    code, out, _ = run(app, capsys, "eval", "--family", "custom", "--base", "1", "--n", "2", "--u", "1/2",
                       "--at", "x=1")
    assert (code, out) == (0, "1/2\n")


def test_eval_at_q_minus_one_within_order_one(app, capsys):
    code, out, _ = run(app, capsys, "eval", "--family", "euler", "--n", "1", "--q=-1", "--at", "x=1")
    assert (code, out) == (0, "1/2\n")


def test_eval_bivariate(app, capsys):
    code, out, _ = run(app, capsys, "eval", "--family", "custom", "--base", "1", "--n", "2", "--u", "1/2",
                       "--q", "2", "--vars", "xy", "--at", "x=1,y=1")
    # x^2 + [2] x y + u y^2
    assert (code, out) == (0, "9/2\n")


@pytest.mark.parametrize("argv", [
    ["eval", "--family", "euler", "--n", "2", "--at", "y=1"],
    ["eval", "--family", "euler", "--n", "2", "--vars", "xy", "--at", "x=1"],
    ["eval", "--family", "euler", "--n", "2", "--at", "x=0.5"],
    ["eval", "--family", "euler", "--n", "2", "--at", "t=1"],
    ["table", "--family", "euler", "--n", "2", "--q", "0.5"],
    ["table", "--family", "euler", "--n", "2", "--q=-1"],
    ["table", "--family", "euler", "--n", "-1"],
    ["table", "--family", "euler", "--n", "3", "--order", "2"],
    ["table", "--family", "euler", "--n", "2", "--quasi"],
    ["table", "--family", "custom", "--n", "2"],
    ["table", "--family", "hermite", "--n", "2"],
    ["table", "--n", "2"],
    ["verify", "--suite", "nope"],
])
def test_usage_errors_exit_2(app, capsys, argv):
    code, _, err = run(app, capsys, *argv)
    assert code == 2
    assert err


@pytest.mark.parametrize("argv", [
    ["table", "--family", "genocchi", "--alpha", "-1", "--n", "2"],
    ["table", "--family", "custom", "--base", "0,1", "--alpha", "-2", "--n", "2"],
])
def test_construction_errors_exit_3(app, capsys, argv):
    code, out, err = run(app, capsys, *argv)
    assert code == 3
    assert out == ""
    assert "zero constant term" in err or "vanishes" in err


def test_help_exits_0(app, capsys):
    code, out, _ = run(app, capsys, "--help")
    assert code == 0
    assert "table" in out


def test_verify_empty_grid_exits_2(app, capsys, tmp_path):
    grid = tmp_path / "grid.json"
    grid.write_text('{"points": []}')
    code, out, _ = run(app, capsys, "verify", "--suite", "qcore", "--grid", str(grid))
    assert code == 2
    assert out == ""


def test_verify_passes(app, capsys, tmp_path):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"points": [{"q": "1/2", "u": "1/3"}, {"q": "2", "u": "0"}]}))
    code, out, _ = run(app, capsys, "verify", "--suite", "derivatives", "--suite", "characterization",
                       "--max-n", "4", "--grid", str(grid))
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert [suite["suite"] for suite in report["suites"]] == ["derivatives", "characterization"]


def test_verify_output_is_deterministic_across_runs(app, capsys, tmp_path):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"q": ["1/2", "2", "1", "-1"], "u": ["1/3", "q", "0"]}))
    argv = ["verify", "--suite", "qcore", "--suite", "leibniz", "--suite", "setalgebra", "--suite", "genfun",
            "--max-n", "3", "--order", "3", "--genfun-order", "3", "--leibniz-pairs", "4",
            "--workers", "4", "--grid", str(grid)]
    first = run(app, capsys, *argv)
    second = run(app, capsys, *argv)
    assert first[0] == second[0] == 0
    assert first[1] == second[1]
    single = run(app, capsys, *argv[:-4], "--workers", "1", "--grid", str(grid))
    assert single[1] == first[1]


def test_verify_failure_exits_1_and_still_reports(app, capsys, tmp_path, monkeypatch):
    failing = {"pass": False, "suites": [{"suite": "leibniz", "anchor": "", "excluded_points": [], "reports": []}]}
    monkeypatch.setattr(VerificationService, "run", lambda self, names, grid, settings: failing)
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"points": [{"q": "1/2", "u": "1"}]}))
    code, out, _ = run(app, capsys, "verify", "--suite", "leibniz", "--grid", str(grid))
    assert code == 1
    assert json.loads(out) == failing
