"""
命令行接口测试
"""

import io
import json
import logging

import pandas as pd
import pytest

from advdiff.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main
from advdiff.model.report import CheckResult
from advdiff.utils.logger import logger, set_log_level


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_csv(capsys):
    code, out, _ = run(capsys, "solve", "--v", "10", "--k", "1", "--f", "1", "--n", "10", "--formulation", "all", "--format", "csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 12
    table = pd.read_csv(io.StringIO(out))
    assert list(table.columns) == [
        "x",
        "u_galerkin",
        "u_artificial",
        "u_weighted",
        "u_exact",
        "err_galerkin",
        "err_artificial",
        "err_weighted",
    ]
    middle = table.loc[(table["x"] - 0.5).abs() < 1e-12]
    assert middle["u_exact"].iloc[0] == pytest.approx(0.0493307, abs=1e-7)
    assert table["err_weighted"].abs().max() <= 1e-10


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "--v", "1", "--k", "0.1", "--formulation", "weighted", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert set(payload) == {"version", "config", "rows"}
    assert payload["config"]["v"] == 1.0
    assert len(payload["rows"]) == 11
    assert set(payload["rows"][0]) == {"x", "u_weighted", "u_exact", "err_weighted"}


def test_solve_without_exact_solution_omits_the_exact_column(capsys):
    code, out, _ = run(capsys, "solve", "--v", "1", "--k", "0.1", "--x-hi", "2", "--formulation", "galerkin")
    assert code == EXIT_OK
    assert list(pd.read_csv(io.StringIO(out)).columns) == ["x", "u_galerkin"]


def test_missing_k_is_a_usage_error(capsys):
    code, out, err = run(capsys, "solve", "--v", "10")
    assert code == EXIT_USAGE
    assert out == ""
    assert "--k" in err
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--v", "1", "--k", "-1"],
        ["solve", "--v", "1", "--k", "1", "--left-bc", "neumann:0", "--right-bc", "neumann:0"],
        ["solve", "--v", "1", "--k", "1", "--n", "1"],
        ["solve", "--v", "1", "--k", "1", "--formulation", "upwind"],
        ["sweep", "--ratios", ""],
        ["sweep"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err.strip()


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--ratios", "1,10,50,100", "--n", "10", "--formulation", "galerkin,weighted")
    assert code == EXIT_OK
    table = pd.read_csv(io.StringIO(out))
    assert list(table["ratio"]) == [1.0, 1.0, 10.0, 10.0, 50.0, 50.0, 100.0, 100.0]
    weighted = table[table["formulation"] == "weighted"]
    assert (weighted["max_nodal_error"] <= 1e-10).all()
    assert (weighted["asymmetry"] <= 1e-12).all()
    galerkin = table[table["formulation"] == "galerkin"].set_index("ratio")
    assert galerkin.loc[100.0, "max_nodal_error"] >= 1e-2
    assert galerkin.loc[100.0, "peclet"] == pytest.approx(5.0)


def test_stencil(capsys):
    code, out, _ = run(capsys, "stencil", "--v", "1", "--k", "0.02", "--n", "10")
    assert code == EXIT_OK
    table = pd.read_csv(io.StringIO(out)).set_index("formulation")
    weighted = table.loc["weighted"]
    expected = (-10.067836, 10.135673, -0.067836)
    for column, value in zip(("c_left", "c_center", "c_right"), expected):
        assert weighted[column] == pytest.approx(value, abs=1e-6)
        assert weighted["asm_" + column[2:]] == pytest.approx(weighted[column], rel=1e-11)
    assert table.loc["artificial", "c_center"] == weighted["c_center"]


def test_stencil_at_unit_peclet(capsys):
    code, out, _ = run(capsys, "stencil", "--v", "1", "--k", "0.05", "--n", "10")
    assert code == EXIT_OK
    table = pd.read_csv(io.StringIO(out)).set_index("formulation")
    assert table.loc["galerkin", "c_right"] == 0.0


def test_stencil_without_advection(capsys):
    code, out, _ = run(capsys, "stencil", "--v", "0", "--k", "1", "--n", "10")
    assert code == EXIT_OK
    table = pd.read_csv(io.StringIO(out))
    for _, row in table.iterrows():
        assert (row["c_left"], row["c_center"], row["c_right"]) == pytest.approx((-100.0, 200.0, -100.0))
    assert table["coth_pe"].isna().all()


def test_output_file_is_deterministic(capsys, tmp_path):
    first = tmp_path / "a" / "solve.csv"
    second = tmp_path / "b" / "solve.csv"
    for path in (first, second):
        code, out, _ = run(capsys, "solve", "--v", "1", "--k", "0.01", "--output", str(path), "--workers", "3")
        assert code == EXIT_OK
        assert out == ""
    assert first.read_bytes() == second.read_bytes()


def test_config_file_with_flag_override(capsys, tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("v: 10\nk: 1\nn: 20\nformulation: weighted\n", encoding="utf-8")
    code, out, _ = run(capsys, "solve", "--config", str(config), "--n", "10")
    assert code == EXIT_OK
    table = pd.read_csv(io.StringIO(out))
    assert len(table) == 11
    assert "u_weighted" in table.columns and "u_galerkin" not in table.columns


def test_verify_writes_a_report_and_passes(capsys, tmp_path):
    report = tmp_path / "verify.json"
    code, _, _ = run(capsys, "verify", "--output", str(report), "--format", "json")
    payload = json.loads(report.read_text(encoding="utf-8"))
    assert set(payload) == {"version", "config", "checks"}
    assert all(set(check) == {"check", "value", "tolerance", "pass"} for check in payload["checks"])
    assert code == EXIT_OK
    assert all(check["pass"] for check in payload["checks"])


def test_verify_failure_exit_code(capsys, tmp_path, monkeypatch):
    failing = [
        CheckResult(check="always_fails", value=1.0, tolerance=0.0, passed=False),
        CheckResult(check="reported", value=2.0, tolerance=None, passed=True),
    ]
    monkeypatch.setattr("advdiff.nodes.run_checks_node.run_acceptance_suite", lambda: failing)
    report = tmp_path / "verify.csv"
    code, _, _ = run(capsys, "verify", "--output", str(report))
    assert code == EXIT_VERIFY_FAILED
    table = pd.read_csv(report)
    assert list(table["check"]) == ["always_fails", "reported"]
    assert list(table["pass"]) == [False, True]


def test_log_level_flag(capsys):
    try:
        code, _, _ = run(capsys, "stencil", "--v", "1", "--k", "1", "--log-level", "warning")
        assert code == EXIT_OK
        assert logger.level == logging.WARNING
        assert all(handler.level == logging.WARNING for handler in logger.handlers)
    finally:
        set_log_level("INFO")
