"""Bit-packed helpers for binary codeword enumeration."""
import numpy as np

# SWAR popcount constants
_S55 = np.uint64(0x5555555555555555)
_S33 = np.uint64(0x3333333333333333)
_S0F = np.uint64(0x0F0F0F0F0F0F0F0F)
_S01 = np.uint64(0x0101010101010101)
_SHIFT = np.uint64(56)


def popcount64(arr: np.ndarray) -> np.ndarray:
    """Per-element popcount of a uint64 array, returned as int64."""
    arr = np.asarray(arr, dtype=np.uint64)
    arr = arr - ((arr >> np.uint64(1)) & _S55)
    arr = (arr & _S33) + ((arr >> np.uint64(2)) & _S33)
    arr = (arr + (arr >> np.uint64(4))) & _S0F
    arr = (arr * _S01) >> _SHIFT
    return arr.astype(np.int64)


def pack_bits(bits) -> int:
    """Pack a 0/1 sequence into an int, index 0 as the least significant bit."""
    value = 0
    for i, b in enumerate(bits):
        if b:
            value |= 1 << i
    return value


def rotate_left(value: int, shift: int, width: int) -> int:
    """Cyclic rotation of a width-bit integer: bit i moves to (i + shift) mod width."""
    shift %= width
    mask = (1 << width) - 1
    return ((value << shift) | (value >> (width - shift))) & mask
