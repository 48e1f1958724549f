"""Pytest configuration and fixtures."""

import tempfile
from fractions import Fraction
from pathlib import Path

import pytest

from wozencraft_codes.core.codec import construct_code
from wozencraft_codes.core.param_file import save_params
from wozencraft_codes.core.params import CodeParams
from wozencraft_codes.core.sidon import SidonSet


@pytest.fixture
def temp_dir():
    """Create a temporary directory for testing."""
    with tempfile.TemporaryDirectory() as tmp_dir:
        yield Path(tmp_dir)


@pytest.fixture(scope="session")
def code_k10() -> CodeParams:
    """Binary rate-1/2 code: k' = 11, d = 3, A = {4, 5, 7}."""
    return construct_code(2, 10)


@pytest.fixture(scope="session")
def code_k28() -> CodeParams:
    """Binary rate-1/2 code: k' = 29, d = 5, A = {4, 6, 19, 20, 23}."""
    return construct_code(2, 28)


@pytest.fixture(scope="session")
def punctured_k10() -> CodeParams:
    """The k' = 11 code punctured to rate 2/3 (5 checks kept)."""
    return construct_code(2, 10, Fraction(2, 3))


@pytest.fixture(scope="session")
def ternary_code() -> CodeParams:
    """Rate-1/2 code over F_3: k' = 7, d = 2, A = {1, 2}."""
    return construct_code(3, 5)


@pytest.fixture
def tiny_code() -> CodeParams:
    """Hand-built q=2, k=2 code with alpha = 1; small enough to check by hand."""
    return CodeParams(q=2, kprime=3, d=2, sidon=SidonSet(p=2, elements=(1, 2)), alpha_coeffs=(1, 0), kept=2)


@pytest.fixture
def param_file(temp_dir, code_k10) -> Path:
    """The k' = 11 code written as a parameter file."""
    return save_params(code_k10, temp_dir / "k11.params")
