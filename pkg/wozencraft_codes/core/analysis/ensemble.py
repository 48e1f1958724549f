"""Random members of the Wozencraft ensemble against alpha* and the GV baseline."""
from __future__ import annotations

import logging
from typing import Callable, Optional

import numpy as np

from ...config import DEFAULT_BUDGET
from ..codec import check_rows, iter_random_alphas, message_from_code
from ..errors import BudgetExceededError
from ..params import CodeParams
from .gv import gv_report
from .models import EnsembleResult, EnsembleSample, UniformityReport
from .search import exact_min_distance, span_table

logger = logging.getLogger(__name__)

UNIFORMITY_LIMIT = 2**12


def run_ensemble(
    params: CodeParams,
    samples: int,
    seed: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    progress: Optional[Callable[[int], None]] = None,
) -> EnsembleResult:
    """Exact distance of ``samples`` seeded random alphas and of alpha*."""
    if samples < 0:
        raise ValueError(f"sample count must be >= 0, got {samples}")
    star = exact_min_distance(params, budget=budget, workers=workers)
    stream = iter_random_alphas(params.q, params.k, seed)
    drawn = []
    for index in range(samples):
        alpha = next(stream)
        report = exact_min_distance(params, alpha, budget=budget, workers=workers)
        drawn.append(EnsembleSample(index=index, alpha=alpha, distance=report.exact_distance))
        if progress is not None:
            progress(index + 1)
    gv = gv_report(params.q, params.n, params.rate)
    logger.info("ensemble of %d samples, alpha* distance %d", samples, star.exact_distance)
    return EnsembleResult(seed=seed, alpha_star_distance=star.exact_distance, samples=tuple(drawn), gv=gv)


def ensemble_uniformity(params: CodeParams, limit: int = UNIFORMITY_LIMIT) -> UniformityReport:
    """Check that every nonzero (u, v) is a codeword of exactly one rate-1/2 member.

    Equivalently, u -> alpha*u permutes the nonzero field elements for each
    nonzero alpha, so alpha = v/u is the only member containing (u, v).
    """
    q, k = params.q, params.k
    size = q**k
    if size > limit:
        raise BudgetExceededError(size, limit)
    full = params.with_kept(k)
    place = q ** np.arange(k, dtype=np.int64)
    expected = np.arange(1, size, dtype=np.int64)
    for code in range(1, size):
        alpha = message_from_code(code, q, k)
        table, _ = span_table(check_rows(full, alpha), q)
        images = table.astype(np.int64) if table.ndim == 1 else table.astype(np.int64) @ place
        if not np.array_equal(np.sort(images[1:]), expected):
            logger.warning("multiplication by alpha=%s is not a bijection", alpha)
            return UniformityReport(q=q, kprime=params.kprime, alphas_checked=code, ok=False, witness=alpha)
    return UniformityReport(q=q, kprime=params.kprime, alphas_checked=size - 1, ok=True)
