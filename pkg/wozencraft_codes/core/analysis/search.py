"""Exhaustive minimum distance and weight distribution.

Messages are enumerated by ascending integer code sum(y_i q^i). The code is
split into h low digits and k - h high digits: the check blocks of all q^h
low parts sit in one table and each high part is added to the whole table
at once. Binary codes with at most 64 kept checks use packed uint64 words,
XOR and a SWAR popcount; everything else uses the field lookup tables.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ...config import DEFAULT_BUDGET
from ...utils.bitops import pack_bits, popcount64
from ..codec import check_rows, encode, message_from_code
from ..errors import BudgetExceededError
from ..galois import field_from_order, field_tables
from ..params import CodeParams
from .models import DistanceReport

logger = logging.getLogger(__name__)

DEFAULT_CHUNK_BITS = 16
# blocks handed to each worker
_BLOCKS_PER_WORKER = 4


@dataclass(frozen=True)
class _Task:
    rows: np.ndarray
    q: int
    h: int
    start: int
    stop: int
    threshold: Optional[int]


@dataclass
class _BlockResult:
    best_weight: Optional[int] = None
    best_code: Optional[int] = None
    histogram: Optional[np.ndarray] = None
    hit_code: Optional[int] = None
    hit_weight: Optional[int] = None


def _low_digits(q: int, k: int, chunk_bits: int) -> int:
    h = 0
    while h < k and q ** (h + 1) <= 2**chunk_bits:
        h += 1
    return max(h, 1)


def span_table(rows: np.ndarray, q: int):
    """Check blocks and message weights of every combination of ``rows``, in code order."""
    n_rows, kept = rows.shape
    weights = np.zeros(1, dtype=np.int64)
    if q == 2 and kept <= 64:
        packed = np.zeros(1, dtype=np.uint64)
        for j in range(n_rows):
            word = np.uint64(pack_bits(rows[j]))
            packed = np.concatenate([packed, packed ^ word])
            weights = np.concatenate([weights, weights + 1])
        return packed, weights
    tables = field_tables(field_from_order(q))
    table = np.zeros((1, kept), dtype=tables.add.dtype)
    for j in range(n_rows):
        blocks = [table]
        w_blocks = [weights]
        for v in range(1, q):
            blocks.append(tables.add[table, tables.mul[v, rows[j]]])
            w_blocks.append(weights + 1)
        table = np.concatenate(blocks)
        weights = np.concatenate(w_blocks)
    return table, weights


def _high_part(rows: np.ndarray, q: int, t: int, packed: bool):
    """Check block and message weight of the high message part with index t."""
    weight = 0
    if packed:
        acc = 0
        j = 0
        while t:
            if t & 1:
                acc ^= pack_bits(rows[j])
                weight += 1
            t >>= 1
            j += 1
        return np.uint64(acc), weight
    tables = field_tables(field_from_order(q))
    acc = np.zeros(rows.shape[1], dtype=tables.add.dtype)
    j = 0
    while t:
        t, digit = divmod(t, q)
        if digit:
            acc = tables.add[acc, tables.mul[digit, rows[j]]]
            weight += 1
        j += 1
    return acc, weight


def _scan_block(task: _Task) -> _BlockResult:
    rows, q, h = task.rows, task.q, task.h
    kept = rows.shape[1]
    n = rows.shape[0] + kept
    packed = q == 2 and kept <= 64
    low_table, low_weights = span_table(rows[:h], q)
    tables = None if packed else field_tables(field_from_order(q))
    stride = q**h
    result = _BlockResult(histogram=np.zeros(n + 1, dtype=np.int64))

    for t in range(task.start, task.stop):
        high_check, high_weight = _high_part(rows[h:], q, t, packed)
        if packed:
            checks = popcount64(low_table ^ high_check)
        else:
            checks = np.count_nonzero(tables.add[low_table, high_check[None, :]], axis=1)
        weights = checks + low_weights + high_weight
        result.histogram += np.bincount(weights, minlength=n + 1)

        candidates = weights if t else weights[1:]
        offset = 0 if t else 1
        if task.threshold is not None:
            hits = np.flatnonzero(candidates < task.threshold)
            if hits.size:
                idx = int(hits[0]) + offset
                result.hit_code = t * stride + idx
                result.hit_weight = int(weights[idx])
                result.histogram = None
                return result
        if candidates.size:
            idx = int(np.argmin(candidates))
            w = int(candidates[idx])
            if result.best_weight is None or w < result.best_weight:
                result.best_weight = w
                result.best_code = t * stride + idx + offset
    return result


def _merge(results: Sequence[_BlockResult], n: int) -> _BlockResult:
    merged = _BlockResult()
    hits = [r for r in results if r.hit_code is not None]
    if hits:
        first = min(hits, key=lambda r: r.hit_code)
        merged.hit_code, merged.hit_weight = first.hit_code, first.hit_weight
        return merged
    finished = [r for r in results if r.best_code is not None]
    if finished:
        best = min(finished, key=lambda r: (r.best_weight, r.best_code))
        merged.best_weight, merged.best_code = best.best_weight, best.best_code
    merged.histogram = np.zeros(n + 1, dtype=np.int64)
    for r in results:
        merged.histogram += r.histogram
    return merged


class ExhaustiveSearch:
    """Scan every codeword of one code; results do not depend on ``workers``."""

    def __init__(
        self,
        params: CodeParams,
        alpha: Optional[Sequence[int]] = None,
        budget: int = DEFAULT_BUDGET,
        workers: int = 1,
        chunk_bits: int = DEFAULT_CHUNK_BITS,
    ):
        self.params = params
        self.alpha = tuple(params.alpha_coeffs if alpha is None else alpha)
        self.budget = budget
        self.workers = max(1, workers)
        self.chunk_bits = chunk_bits

    @property
    def space(self) -> int:
        return self.params.q**self.params.k - 1

    def _tasks(self, threshold: Optional[int]) -> List[_Task]:
        q, k = self.params.q, self.params.k
        rows = check_rows(self.params, self.alpha)
        h = _low_digits(q, k, self.chunk_bits)
        high = q ** (k - h)
        n_blocks = 1 if self.workers == 1 else min(high, self.workers * _BLOCKS_PER_WORKER)
        bounds = [high * i // n_blocks for i in range(n_blocks + 1)]
        return [_Task(rows, q, h, lo, hi, threshold) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]

    def _execute(self, threshold: Optional[int]) -> _BlockResult:
        if self.space > self.budget:
            raise BudgetExceededError(self.space, self.budget)
        tasks = self._tasks(threshold)
        if self.workers == 1:
            results = [_scan_block(t) for t in tasks]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(_scan_block, tasks))
        return _merge(results, self.params.n)

    def run(self, prove_at_least: Optional[int] = None) -> DistanceReport:
        started = time.perf_counter()
        logger.info(
            "exhaustive search over %d messages (q=%d, k=%d, kept=%d, workers=%d)",
            self.space, self.params.q, self.params.k, self.params.kept, self.workers,
        )
        merged = self._execute(prove_at_least)
        elapsed = time.perf_counter() - started
        q, k = self.params.q, self.params.k
        if merged.hit_code is not None:
            return DistanceReport(
                q=q,
                k=k,
                n=self.params.n,
                search_space=merged.hit_code,
                witness=message_from_code(merged.hit_code, q, k),
                witness_code=merged.hit_code,
                disproved_threshold=prove_at_least,
                exact_distance=None,
                elapsed=elapsed,
            )
        histogram = {w: int(c) for w, c in enumerate(merged.histogram) if c}
        return DistanceReport(
            q=q,
            k=k,
            n=self.params.n,
            search_space=self.space,
            exact_distance=merged.best_weight,
            witness=message_from_code(merged.best_code, q, k),
            witness_code=merged.best_code,
            histogram=histogram,
            elapsed=elapsed,
        )


def exact_min_distance(
    params: CodeParams,
    alpha: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    prove_at_least: Optional[int] = None,
    chunk_bits: int = DEFAULT_CHUNK_BITS,
) -> DistanceReport:
    """Minimum codeword weight with the smallest-code witness.

    With ``prove_at_least`` the scan stops at the first codeword lighter than
    the threshold and the report carries that disproof instead.
    """
    return ExhaustiveSearch(params, alpha, budget, workers, chunk_bits).run(prove_at_least)


def weight_distribution(
    params: CodeParams,
    alpha: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> Dict[int, int]:
    """Codeword-weight histogram; the zero codeword is included."""
    # q^k codewords against a budget stated in codewords
    search = ExhaustiveSearch(params, alpha, max(budget - 1, 0), workers)
    report = search.run()
    assert report.histogram is not None
    return report.histogram


def naive_min_distance(params: CodeParams, alpha: Optional[Sequence[int]] = None) -> Tuple[int, int]:
    """(minimum weight, smallest code attaining it) by encoding every message."""
    q, k = params.q, params.k
    best: Optional[Tuple[int, int]] = None
    for code in range(q**k - 1, 0, -1):
        weight = sum(1 for c in encode(message_from_code(code, q, k), params, alpha) if c)
        if best is None or (weight, code) < best:
            best = (weight, code)
    assert best is not None
    return best
