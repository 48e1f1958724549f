"""Tests for bit-packing helpers."""

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from wozencraft_codes.utils.bitops import pack_bits, popcount64, rotate_left


def test_popcount64_edges():
    values = np.array([0, 1, 3, 0xFF, 2**63, 2**64 - 1], dtype=np.uint64)
    assert popcount64(values).tolist() == [0, 1, 2, 8, 1, 64]
    assert popcount64(values).dtype == np.int64


@given(st.lists(st.integers(0, 2**64 - 1), min_size=1, max_size=50))
def test_popcount64_matches_int_bit_count(values):
    arr = np.array(values, dtype=np.uint64)
    assert popcount64(arr).tolist() == [v.bit_count() for v in values]


def test_pack_bits_is_little_endian():
    assert pack_bits((1, 0, 1, 1)) == 0b1101
    assert pack_bits((0, 0, 0, 0, 0, 1)) == 32


def test_rotate_left_is_multiplication_by_x():
    # x^10 * x = x^0 in a width-11 ring
    assert rotate_left(1 << 10, 1, 11) == 1
    assert rotate_left(0b10110000, 0, 11) == 0b10110000
    assert rotate_left(pack_bits((0, 0, 0, 0, 1, 1, 0, 1)), 6, 11) == pack_bits((1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1))
