"""Tests for Artin primes, irreducibility and CodeParams validation."""

from dataclasses import replace
from fractions import Fraction

import pytest

from wozencraft_codes.core import params as params_module
from wozencraft_codes.core.errors import NotPrimeError, SearchExhaustedError
from wozencraft_codes.core.params import (
    bertrand_holds,
    cyclotomic_modulus,
    find_artin_prime,
    recheck_skipped,
    skipped_candidates,
    validate_params,
    verify_irreducible,
)
from wozencraft_codes.core.sidon import SidonSet


class TestArtinPrimes:
    @pytest.mark.parametrize(
        "q,k_min,expected",
        [(2, 10, 11), (2, 5, 11), (3, 4, 5), (2, 28, 29), (3, 5, 7)],
    )
    def test_find(self, q, k_min, expected):
        assert find_artin_prime(q, k_min) == expected

    def test_skipped(self):
        assert skipped_candidates(2, 5, 11) == [6, 7, 8, 9, 10]

    def test_recheck_examines_every_short_gap(self):
        assert recheck_skipped(2, 5, 11) == [6, 7, 8, 9, 10]

    def test_recheck_samples_ten_of_a_long_gap(self):
        # 2 is a primitive root mod 67 and 83 but not in between
        assert find_artin_prime(2, 67) == 83
        sampled = recheck_skipped(2, 67, 83, seed=3)
        assert len(sampled) == 10
        assert sampled == sorted(set(sampled))
        assert set(sampled) <= set(range(68, 83))
        assert recheck_skipped(2, 67, 83, seed=3) == sampled

    def test_recheck_catches_a_wrongly_skipped_prime(self, monkeypatch):
        monkeypatch.setattr(params_module, "_is_artin_prime", lambda q, candidate: False)
        with pytest.raises(AssertionError, match="skipped candidate 11"):
            recheck_skipped(2, 10, 14)

    def test_square_q_never_primitive(self):
        # 4 is a square, so it is never a primitive root modulo an odd prime
        with pytest.raises(SearchExhaustedError):
            find_artin_prime(4, 10, cap_factor=4)

    def test_rejects_non_prime_power(self):
        with pytest.raises(NotPrimeError):
            find_artin_prime(6, 10)
        with pytest.raises(ValueError):
            find_artin_prime(2, 1)


class TestIrreducibility:
    def test_cyclotomic_modulus(self):
        assert cyclotomic_modulus(3) == (1, 1, 1)
        assert cyclotomic_modulus(2) == (1, 1)

    @pytest.mark.parametrize("q,kprime", [(2, 3), (2, 5), (2, 11), (2, 13), (3, 5), (3, 7), (2, 29)])
    def test_irreducible(self, q, kprime):
        cert = verify_irreducible(q, kprime)
        assert cert.irreducible
        assert cert.ring_consistent is True
        assert cert.witness is None

    def test_reducible_has_witness(self):
        cert = verify_irreducible(2, 7)
        assert not cert
        assert cert.witness == 3
        assert cert.ring_consistent is True

    def test_ring_check_can_be_skipped(self):
        assert verify_irreducible(2, 11, ring_check_limit=5).ring_consistent is None

    def test_requires_prime(self):
        with pytest.raises(NotPrimeError):
            verify_irreducible(2, 9)


class TestCodeParams:
    def test_derived_quantities(self, code_k10, punctured_k10):
        assert code_k10.k == 10
        assert code_k10.n == 20
        assert code_k10.rate == Fraction(1, 2)
        assert code_k10.is_rate_half and code_k10.is_alpha_star
        assert punctured_k10.kept == 5
        assert punctured_k10.rate == Fraction(2, 3)

    def test_constructed_codes_are_valid(self, code_k10, punctured_k10, ternary_code):
        assert validate_params(code_k10) == []
        assert validate_params(punctured_k10) == []
        assert validate_params(ternary_code) == []

    def test_zero_alpha(self, code_k10):
        problems = validate_params(code_k10.with_alpha((0,) * 10))
        assert "alpha must be nonzero" in problems

    def test_non_artin_prime(self, code_k10):
        problems = validate_params(replace(code_k10, kprime=7))
        assert any("primitive root" in p for p in problems)

    def test_bad_sidon_set(self, code_k10):
        bad = replace(code_k10, sidon=SidonSet(p=3, elements=(1, 2, 3)))
        problems = validate_params(bad)
        assert any("not Sidon" in p for p in problems)

    def test_kept_range(self, code_k10):
        assert validate_params(code_k10.with_kept(0))
        assert validate_params(code_k10.with_kept(11))

    def test_bertrand(self):
        assert bertrand_holds(3, 10)
        assert bertrand_holds(5, 28)
        assert not bertrand_holds(2, 17)
