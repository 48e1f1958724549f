"""Tests for the genmat command."""
from typer.testing import CliRunner

from wozencraft_codes.cli import app
from wozencraft_codes.core.codec import GeneratorMatrix, encode

runner = CliRunner()


def test_genmat_writes_matrix(temp_dir, param_file, code_k10):
    out = temp_dir / "g.txt"
    result = runner.invoke(app, ["genmat", "--params", str(param_file), "--out", str(out)])
    assert result.exit_code == 0
    matrix = GeneratorMatrix.from_text(out.read_text())
    assert (matrix.q, matrix.k, matrix.n) == (2, 10, 20)
    message = (0, 1, 1, 0, 0, 1, 0, 0, 0, 1)
    assert matrix.encode(message) == encode(message, code_k10)


def test_genmat_punctured(temp_dir, param_file):
    out = temp_dir / "g23.txt"
    result = runner.invoke(app, ["genmat", "--params", str(param_file), "--rate", "2/3", "--out", str(out)])
    assert result.exit_code == 0
    assert out.read_text().splitlines()[0] == "2 10 15"


def test_genmat_inexact_rate_warns(temp_dir, param_file):
    out = temp_dir / "g34.txt"
    result = runner.invoke(app, ["genmat", "--params", str(param_file), "--rate", "3/4", "--out", str(out)])
    assert result.exit_code == 0
    assert "not exact" in result.output
    assert out.read_text().splitlines()[0] == "2 10 14"


def test_genmat_missing_params(temp_dir):
    result = runner.invoke(app, ["genmat", "--params", str(temp_dir / "nope"), "--out", str(temp_dir / "g")])
    assert result.exit_code == 2
