"""Tests for the verify command."""
import re

from typer.testing import CliRunner

from wozencraft_codes.cli import app
from wozencraft_codes.core.param_file import save_params

runner = CliRunner()


def test_verify_csv(param_file):
    result = runner.invoke(app, ["verify", "--params", str(param_file), "--trials", "50", "--csv"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "check,status,detail"
    statuses = [line.split(",")[1] for line in lines[1:]]
    assert len(statuses) == 20
    assert set(statuses) == {"pass"}


def test_verify_table(param_file):
    result = runner.invoke(app, ["verify", "--params", str(param_file), "--trials", "20"])
    assert result.exit_code == 0
    assert "All 20 checks passed" in re.sub(r"\x1b\[[0-9;]*m", "", result.output)


def test_verify_ensemble_check(param_file):
    result = runner.invoke(
        app, ["verify", "--params", str(param_file), "--trials", "20", "--ensemble-check", "--csv"]
    )
    assert result.exit_code == 0
    assert any(line.startswith("ensemble.uniformity,pass") for line in result.stdout.splitlines())


def test_verify_failure(temp_dir, code_k10):
    weak = save_params(code_k10.with_alpha((1,) + (0,) * 9), temp_dir / "weak.params")
    result = runner.invoke(app, ["verify", "--params", str(weak), "--trials", "20", "--csv"])
    assert result.exit_code == 1
    assert any(line.startswith("distance.certificate,FAIL") for line in result.stdout.splitlines())
