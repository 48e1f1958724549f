"""Tests for parameter file loading, saving and validation."""

import pytest

from wozencraft_codes.core.errors import ParamFileError
from wozencraft_codes.core.param_file import KEY_ORDER, ParamFile, load_params, save_params

EXPECTED = """\
format = wozencraft-params-v1
basis = monomial
q = 2
kprime = 11
k = 10
d = 3
sidon_modulus = 8
sidon = 4,5,7
alpha_coeffs = 0,0,0,0,1,1,0,1,0,0
rate = 1/2
kept = 10
"""


def edit(text: str, key: str, value: str) -> str:
    lines = [f"{key} = {value}" if line.split(" = ")[0] == key else line for line in text.splitlines()]
    return "\n".join(lines) + "\n"


class TestParamFile:
    """Writing and re-reading parameter files."""

    def test_dumps(self, code_k10):
        assert ParamFile(code_k10).dumps() == EXPECTED

    def test_key_order(self, code_k10):
        keys = [line.split(" = ")[0] for line in ParamFile(code_k10).dumps().splitlines()]
        assert tuple(keys) == KEY_ORDER

    def test_save_load_is_byte_identical(self, temp_dir, code_k10):
        first = save_params(code_k10, temp_dir / "a.params")
        second = save_params(load_params(first), temp_dir / "b.params")
        assert first.read_bytes() == second.read_bytes()

    def test_load_restores_params(self, param_file, code_k10):
        loaded = load_params(param_file)
        assert loaded == code_k10
        assert loaded.sidon.generator_code == 4

    def test_punctured(self, punctured_k10):
        text = ParamFile(punctured_k10).dumps()
        assert "rate = 2/3" in text
        assert "kept = 5" in text
        assert ParamFile.loads(text).params == punctured_k10

    def test_comments_and_blank_lines(self):
        text = "# generated\n\n" + EXPECTED.replace("q = 2", "q = 2   ")
        assert ParamFile.loads(text).params.kprime == 11

    def test_missing_file(self, temp_dir):
        with pytest.raises(FileNotFoundError):
            load_params(temp_dir / "absent.params")


class TestRejections:
    """Every malformed or inconsistent file raises ParamFileError."""

    @pytest.mark.parametrize(
        "key,value",
        [
            ("format", "wozencraft-params-v2"),
            ("basis", "normal"),
            ("q", "two"),
            ("rate", "0.5"),
            ("sidon", "4,5,x"),
            ("kept", "0"),
        ],
    )
    def test_schema_errors(self, key, value):
        with pytest.raises(ParamFileError):
            ParamFile.loads(edit(EXPECTED, key, value))

    def test_unknown_key(self):
        with pytest.raises(ParamFileError):
            ParamFile.loads(EXPECTED + "extra = 1\n")

    def test_missing_key(self):
        text = "".join(line + "\n" for line in EXPECTED.splitlines() if not line.startswith("d ="))
        with pytest.raises(ParamFileError):
            ParamFile.loads(text)

    def test_duplicate_key(self):
        with pytest.raises(ParamFileError, match="duplicate"):
            ParamFile.loads(EXPECTED + "q = 2\n")

    def test_line_without_equals(self):
        with pytest.raises(ParamFileError, match="line 1"):
            ParamFile.loads("format wozencraft\n")

    @pytest.mark.parametrize(
        "key,value",
        [
            ("k", "9"),
            ("sidon_modulus", "9"),
            ("rate", "2/3"),
            ("alpha_coeffs", "0,0,0,0,0,0,0,0,0,0"),
            ("alpha_coeffs", "0,0,0,1"),
            ("sidon", "1,2,3"),
            ("kprime", "13"),
        ],
    )
    def test_semantic_errors(self, key, value):
        with pytest.raises(ParamFileError):
            ParamFile.loads(edit(EXPECTED, key, value))

    def test_error_names_source(self):
        with pytest.raises(ParamFileError, match="broken.params"):
            ParamFile.loads(edit(EXPECTED, "q", "3"), "broken.params")
