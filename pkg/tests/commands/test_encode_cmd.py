"""Tests for the encode command."""
from typer.testing import CliRunner

from wozencraft_codes.cli import app

runner = CliRunner()


def test_encode_unit_message(param_file):
    result = runner.invoke(app, ["encode", "--params", str(param_file), "--message", "1,0,0,0,0,0,0,0,0,0"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "1 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 1 0 0"


def test_encode_wrapping_message(param_file):
    result = runner.invoke(app, ["encode", "--params", str(param_file), "--message", "0,0,0,0,0,0,1,0,0,0"])
    assert result.exit_code == 0
    symbols = result.stdout.split()
    assert len(symbols) == 20
    assert symbols.count("1") == 9


def test_encode_punctured(param_file):
    result = runner.invoke(
        app, ["encode", "--params", str(param_file), "--rate", "2/3", "--message", "1,0,0,0,0,0,0,0,0,0"]
    )
    assert result.exit_code == 0
    assert result.stdout.strip() == "1 0 0 0 0 0 0 0 0 0 0 0 0 0 1"


def test_encode_bad_messages(param_file):
    for message in ("1,0,1", "2,0,0,0,0,0,0,0,0,0", "a,b"):
        result = runner.invoke(app, ["encode", "--params", str(param_file), "--message", message])
        assert result.exit_code == 2, message


def test_encode_invalid_param_file(temp_dir):
    broken = temp_dir / "broken.params"
    broken.write_text("format = something-else\n")
    result = runner.invoke(app, ["encode", "--params", str(broken), "--message", "1"])
    assert result.exit_code == 2
    assert "Error loading parameter file" in result.output
