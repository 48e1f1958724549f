"""Tests for Bose-Chowla sets and the window-count bounds."""

import math

import pytest

from wozencraft_codes.core.errors import DegreeOverflowError, NoPrimeError, NotPrimeError
from wozencraft_codes.core.sidon import (
    bose_chowla,
    largest_prime_below,
    lindstrom_bound,
    max_window_count,
    sidon_order,
    trivial_order_bound,
    verify_sidon,
    window_count_bounds,
    window_counts,
)


class TestSidonOrder:
    def test_largest_prime_below(self):
        assert largest_prime_below(math.sqrt(10)) == 3
        assert largest_prime_below(math.sqrt(28)) == 5
        assert largest_prime_below(3.0) == 2
        with pytest.raises(NoPrimeError):
            largest_prime_below(2.0)

    def test_sidon_order_is_strict(self):
        assert sidon_order(10) == 3
        assert sidon_order(28) == 5
        # 5 * 5 == 25 is not < 25
        assert sidon_order(25) == 3
        with pytest.raises(NoPrimeError):
            sidon_order(4)


class TestBoseChowla:
    def test_small_sets(self):
        assert bose_chowla(2).elements == (1, 2)
        assert bose_chowla(3).elements == (4, 5, 7)
        assert bose_chowla(3).generator_code == 4

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23])
    def test_sets_are_sidon(self, p):
        result = bose_chowla(p)
        assert len(result) == p
        assert list(result.elements) == sorted(result.elements)
        assert 1 <= result.elements[0] and result.elements[-1] <= p * p - 2
        assert verify_sidon(result.elements, result.modulus)
        assert verify_sidon(result.elements)

    def test_rejects_composite(self):
        with pytest.raises(NotPrimeError):
            bose_chowla(4)

    def test_length_respects_trivial_bound(self):
        result = bose_chowla(7)
        assert result.order <= trivial_order_bound(result.length)


class TestVerifySidon:
    def test_accepts(self):
        assert verify_sidon({4, 5, 7}, 8).ok
        assert verify_sidon({0}, 8).ok
        assert verify_sidon([]).ok

    def test_collision_witness(self):
        verdict = verify_sidon({0, 1, 2}, 8)
        assert not verdict
        assert verdict.witness == ((1, 0), (2, 1))

    def test_modular_collision_only(self):
        # 0, 1, 3 is Sidon over Z but 3 - 0 == 0 - 1 (mod 4)
        assert verify_sidon({0, 1, 3}).ok
        assert not verify_sidon({0, 1, 3}, 4).ok


class TestWindows:
    A = (4, 5, 7)

    def test_lindstrom_bound(self):
        assert lindstrom_bound(0) == 1.0
        assert lindstrom_bound(16) == pytest.approx(7.0)

    def test_window_counts(self):
        assert window_counts(self.A, 2, 8) == [0, 0, 0, 1, 2, 1, 1]
        assert max_window_count(self.A, 2, 8) == 2
        assert len(window_counts(self.A, 2, 8, cyclic=True)) == 8

    def test_full_window(self):
        result = window_count_bounds(self.A, 0, 11, 11)
        assert result.count == 3
        assert result.lower == pytest.approx(1.0)

    def test_short_windows(self):
        assert window_count_bounds(self.A, 0, 5, 11).count == 1
        assert window_count_bounds(self.A, 7, 5, 11).count == 3
        assert window_count_bounds(self.A, 0, 5, 11).upper == pytest.approx(lindstrom_bound(5))

    def test_all_windows_hold(self):
        for shift in range(11):
            for m in range(1, 11):
                result = window_count_bounds(self.A, shift, m, 11)
                assert result.lower <= result.count <= result.upper

    def test_all_windows_hold_at_k29(self):
        A = bose_chowla(5).elements
        assert A == (4, 6, 19, 20, 23)
        for shift in range(29):
            for m in range(1, 29):
                result = window_count_bounds(A, shift, m, 29)
                assert result.lower <= result.count <= result.upper

    def test_bad_window(self):
        with pytest.raises(ValueError):
            window_count_bounds(self.A, 0, 0, 11)
        with pytest.raises(DegreeOverflowError):
            window_count_bounds((4, 5, 10), 0, 5, 11)
