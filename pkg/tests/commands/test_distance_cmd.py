"""Tests for the distance command."""
import pytest
from typer.testing import CliRunner

from wozencraft_codes.cli import app
from wozencraft_codes.core.analysis import exact_min_distance
from wozencraft_codes.core.param_file import save_params

runner = CliRunner()


@pytest.fixture
def alpha_one_file(temp_dir, code_k10):
    return save_params(code_k10.with_alpha((1,) + (0,) * 9), temp_dir / "alpha1.params")


@pytest.fixture
def wrapping_file(temp_dir, code_k28):
    return save_params(code_k28, temp_dir / "k29.params")


def run_csv(*args):
    result = runner.invoke(app, ["distance", *args, "--csv"])
    return result, result.stdout.splitlines()


def test_default_certifies_guarantee(param_file):
    result, lines = run_csv("--params", str(param_file))
    assert result.exit_code == 0
    assert lines[0] == "key,value"
    for line in (
        "guarantee,3",
        "guarantee_vacuous,no",
        "certify_target,3",
        "certificate,pass",
        "certificate_examined,66",
        "certified_lower_bound,3",
        "certified_method,enumeration",
    ):
        assert line in lines


def test_exact(param_file, code_k10):
    expected = exact_min_distance(code_k10)
    result, lines = run_csv("--params", str(param_file), "--exact")
    assert result.exit_code == 0
    assert f"exact_distance,{expected.exact_distance}" in lines
    assert f"witness_code,{expected.witness_code}" in lines
    assert "search_space,1023" in lines
    assert "wraparound_free,yes" in lines
    assert "certified_method,claims" in lines
    assert "consistent,yes" in lines


def test_wrapping_sidon_set_is_certified_by_enumeration(wrapping_file):
    """Claims do not cover a set whose differences wrap, so the guarantee is enumerated."""
    result, lines = run_csv("--params", str(wrapping_file), "--prove-at-least", "50")
    assert result.exit_code == 1
    assert "wraparound_free,no" in lines
    assert "certify_target,5" in lines
    assert "certificate,pass" in lines
    assert "certified_lower_bound,5" in lines
    assert "certified_method,enumeration" in lines
    assert "certified_method,claims" not in lines


def test_exact_alpha_one(alpha_one_file):
    result, lines = run_csv("--params", str(alpha_one_file), "--exact")
    assert result.exit_code == 0
    assert "exact_distance,2" in lines
    assert "witness,1000000000" in lines


def test_distribution(param_file):
    result, lines = run_csv("--params", str(param_file), "--distribution")
    assert result.exit_code == 0
    start = lines.index("weight,count")
    counts = dict(line.split(",") for line in lines[start + 1 :])
    assert counts["0"] == "1"
    assert sum(int(c) for c in counts.values()) == 1024


def test_prove_at_least_disproved(param_file):
    result, lines = run_csv("--params", str(param_file), "--prove-at-least", "50")
    assert result.exit_code == 1
    assert "disproved_at_least,50" in lines


def test_prove_at_least_holds(param_file):
    result, lines = run_csv("--params", str(param_file), "--prove-at-least", "3")
    assert result.exit_code == 0
    assert not any(line.startswith("disproved_at_least") for line in lines)


def test_certificate_failure(alpha_one_file):
    result, lines = run_csv("--params", str(alpha_one_file), "--certify", "3")
    assert result.exit_code == 1
    assert "certificate,fail" in lines
    assert "certificate_witness,10000000000" in lines


def test_punctured_guarantee_is_vacuous(param_file):
    result, lines = run_csv("--params", str(param_file), "--rate", "2/3")
    assert result.exit_code == 0
    assert "guarantee,0" in lines
    assert "guarantee_vacuous,yes" in lines
    assert not any(line.startswith("certificate") for line in lines)


def test_budget_exceeded(param_file):
    result, _ = run_csv("--params", str(param_file), "--exact", "--budget", "100")
    assert result.exit_code == 2


def test_table_output(param_file):
    result = runner.invoke(app, ["distance", "--params", str(param_file)])
    assert result.exit_code == 0
    assert "Distance report" in result.output
