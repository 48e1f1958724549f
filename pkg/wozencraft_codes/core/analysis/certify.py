"""Distance certificates by enumerating low-weight ring elements.

For every y in R with 1 <= w~t(y) <= c - 1 the product alpha*y must satisfy
c - w~t(y) <= weight(alpha*y) <= window - (c - w~t(y)); weight is w~t over all
k' coefficients with window k at rate 1/2, and the weight of the first m
coefficients with window m for a code keeping m checks. Passing proves
distance >= c without touching the q^k codewords.
"""
from __future__ import annotations

import itertools
import logging
import math
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ...config import DEFAULT_CERTIFY_BUDGET
from ...utils.bitops import pack_bits, rotate_left
from ..cyclic import RingElement
from ..errors import BudgetExceededError
from ..galois import field_tables
from ..params import CodeParams
from .claims import PUNCTURED, RATE_HALF
from .models import Certificate

logger = logging.getLogger(__name__)

Support = Tuple[int, ...]


def enumeration_size(kprime: int, q: int, c: int) -> int:
    """sum over w = 1..c-1 of C(k', w) * (q - 1)^w."""
    return sum(math.comb(kprime, w) * (q - 1) ** w for w in range(1, c))


def iter_low_weight(kprime: int, q: int, max_weight: int) -> Iterator[Tuple[Support, Tuple[int, ...]]]:
    """Supports in lexicographic order, nonzero coefficient patterns in odometer order."""
    nonzero = range(1, q)
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(kprime), w):
            for coeffs in itertools.product(nonzero, repeat=w):
                yield support, coeffs


def _expand(support: Support, coeffs: Sequence[int], kprime: int) -> Tuple[int, ...]:
    y = [0] * kprime
    for s, b in zip(support, coeffs):
        y[s] = b
    return tuple(y)


def certify_distance(
    alpha: Sequence[int],
    c: int,
    params: CodeParams,
    mode: Optional[str] = None,
    budget: int = DEFAULT_CERTIFY_BUDGET,
) -> Certificate:
    if c < 1:
        raise ValueError(f"target distance must be >= 1, got {c}")
    if mode is None:
        mode = RATE_HALF if params.is_rate_half else PUNCTURED
    if mode not in (RATE_HALF, PUNCTURED):
        raise ValueError(f"unknown certification mode {mode!r}")
    if not any(alpha):
        raise ValueError("alpha must be nonzero")

    q, kprime, k = params.q, params.kprime, params.k
    window = k if mode == RATE_HALF else params.kept
    # positions counted by the weight: all k' coefficients, or the first m
    counted = kprime if mode == RATE_HALF else params.kept

    size = enumeration_size(kprime, q, c)
    if size > budget:
        raise BudgetExceededError(size, budget)
    logger.info("certifying distance >= %d (%s): %d ring elements", c, mode, size)

    a = RingElement.embed(alpha, q, kprime).coeffs
    if q == 2:
        witness = _scan_binary(a, c, kprime, window, counted)
    else:
        witness = _scan_tables(a, c, params, window, counted)

    if witness is None:
        return Certificate(c=c, mode=mode, window=window, passed=True, examined=size)
    y, weight, examined = witness
    logger.info("certificate for c=%d fails at y=%s (product weight %d)", c, y, weight)
    return Certificate(
        c=c,
        mode=mode,
        window=window,
        passed=False,
        examined=examined,
        witness=y,
        witness_product_weight=weight,
    )


def _violates(weight: int, w: int, c: int, window: int) -> bool:
    need = c - w
    return not (need <= weight <= window - need)


def _scan_binary(a: Sequence[int], c: int, kprime: int, window: int, counted: int):
    base = pack_bits(a)
    rotations = [rotate_left(base, s, kprime) for s in range(kprime)]
    mask = (1 << counted) - 1
    examined = 0
    for w in range(1, c):
        for support in itertools.combinations(range(kprime), w):
            examined += 1
            product = 0
            for s in support:
                product ^= rotations[s]
            weight = (product & mask).bit_count()
            if _violates(weight, w, c, window):
                return _expand(support, (1,) * w, kprime), weight, examined
    return None


def _scan_tables(a: Sequence[int], c: int, params: CodeParams, window: int, counted: int):
    tables = field_tables(params.field)
    kprime = params.kprime
    base = np.asarray(a, dtype=np.int64)
    rotations = [np.roll(base, s) for s in range(kprime)]
    examined = 0
    for support, coeffs in iter_low_weight(kprime, params.q, c - 1):
        examined += 1
        product = np.zeros(kprime, dtype=np.int64)
        for s, b in zip(support, coeffs):
            product = tables.add[product, tables.mul[b, rotations[s]]]
        weight = int(np.count_nonzero(product[:counted]))
        if _violates(weight, len(support), c, window):
            return _expand(support, coeffs, kprime), weight, examined
    return None
