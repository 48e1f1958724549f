"""J-profiles and the four counting claims behind the distance guarantee."""
from __future__ import annotations

import logging
import math
from typing import Iterable, List, Optional, Sequence

from ...config import FLOAT_SLACK
from ..errors import ClaimViolationError
from ..params import CodeParams, bertrand_holds
from ..sidon import lindstrom_bound
from .models import ClaimCheck, ClaimReport, JProfile, TheoreticalBounds

logger = logging.getLogger(__name__)

RATE_HALF = "rate_half"
PUNCTURED = "punctured"


def j_profile(sidon: Iterable[int], support: Iterable[int], kprime: int, window: Optional[int] = None) -> JProfile:
    """Tally m(j) = |(j - A) mod k' ∩ S| over j in [0, window)."""
    elements = tuple(sidon)
    S = frozenset(support)
    window = kprime if window is None else window
    if not S:
        raise ValueError("support must be nonempty")
    if any(not 0 <= s < kprime for s in S):
        raise ValueError(f"support must lie in [0, {kprime})")
    if not 0 < window <= kprime:
        raise ValueError(f"window must satisfy 0 < window <= {kprime}, got {window}")
    w = len(S)
    counts = {m: 0 for m in range(w + 1)}
    for j in range(window):
        m = sum(1 for a in elements if (j - a) % kprime in S)
        counts[m] += 1
    return JProfile(w=w, counts=counts, window=window, support=tuple(sorted(S)))


def wraparound_free(sidon: Sequence[int], kprime: int) -> bool:
    """No residue mod k' has two integer representatives among the differences of A.

    When this fails a pair {s, s'} may sit in (j - A) for two values of j and
    the single-overlap form of the J_1 count is no longer a theorem.
    """
    if not sidon:
        return True
    return 2 * (max(sidon) - min(sidon)) < kprime


def claims_cover(params: CodeParams) -> bool:
    """True when the claims prove the guarantee: alpha* over a wraparound-free set."""
    return params.is_alpha_star and wraparound_free(params.sidon.elements, params.kprime)


def _raise_on(report: ClaimReport) -> None:
    for check in report.violations:
        raise ClaimViolationError(check.name, check.observed, check.bound, report.support)


def check_claims_rate_half(profile: JProfile, w: int, d: int, k: int, strict: bool = False) -> ClaimReport:
    """|J_1| >= wd - w(w-1), |J_0| >= k - wd and sum C(m,2)|J_m| <= w(w-1)."""
    j1_bound = w * d - w * (w - 1)
    j0_bound = k - w * d
    pair_bound = w * (w - 1)
    checks = (
        ClaimCheck("J1", profile.size(1), j1_bound, profile.size(1) >= j1_bound),
        ClaimCheck("J0", profile.size(0), j0_bound, profile.size(0) >= j0_bound),
        ClaimCheck("pairs", profile.pair_sum, pair_bound, profile.pair_sum <= pair_bound, "upper"),
    )
    report = ClaimReport(RATE_HALF, profile.support, checks)
    if not report.passed:
        logger.warning("rate-1/2 claims fail on support %s: %s", profile.support, report.violations)
        if strict:
            _raise_on(report)
    return report


def punctured_j1_bound(w: int, d: int, k: int, m: int) -> float:
    rest = k - m
    return w * (d - math.sqrt(rest) - rest**0.25 - 1) - w * w


def punctured_j0_bound(w: int, m: int) -> float:
    return m - w * lindstrom_bound(m)


def check_claims_punctured(
    profile: JProfile,
    w: int,
    d: int,
    k: int,
    m: Optional[int] = None,
    strict: bool = False,
    slack: float = FLOAT_SLACK,
) -> ClaimReport:
    """Punctured claims on a profile taken over the kept window [0, m).

    Real-valued bounds are compared with ``slack`` in the safe direction.
    """
    m = profile.window if m is None else m
    j1_bound = punctured_j1_bound(w, d, k, m)
    j0_bound = punctured_j0_bound(w, m)
    checks = (
        ClaimCheck("J1r", profile.size(1), j1_bound, profile.size(1) >= j1_bound - slack),
        ClaimCheck("J0r", profile.size(0), j0_bound, profile.size(0) >= j0_bound - slack),
    )
    report = ClaimReport(PUNCTURED, profile.support, checks)
    if not report.passed:
        logger.warning("punctured claims fail on support %s: %s", profile.support, report.violations)
        if strict:
            _raise_on(report)
    return report


def theoretical_bounds(params: CodeParams, slack: float = FLOAT_SLACK) -> TheoreticalBounds:
    """Distance the construction guarantees for these parameters.

    Rate 1/2 guarantees d. A punctured code keeping m checks is limited by
    d - sqrt(k-m) - (k-m)^(1/4) - 1 and by m / (sqrt(m) + m^(1/4) + 1).
    """
    k, d, m = params.k, params.d, params.kept
    if params.is_rate_half:
        sidon_restriction = float(d)
        window_restriction = k / d
        guarantee = d
    else:
        rest = k - m
        sidon_restriction = d - math.sqrt(rest) - rest**0.25 - 1
        window_restriction = m / lindstrom_bound(m)
        guarantee = max(0, math.floor(min(sidon_restriction, window_restriction) + slack))
    rate = params.rate
    factor = 1 - math.sqrt(max(0.0, 2 - float(1 / rate)))
    return TheoreticalBounds(
        k=k,
        d=d,
        kept=m,
        rate=rate,
        restriction_sidon=sidon_restriction,
        restriction_window=window_restriction,
        guarantee=guarantee,
        asymptotic_factor=factor,
        bertrand_holds=bertrand_holds(d, k),
    )


def claims_for_support(
    sidon: Sequence[int], support: Sequence[int], kprime: int, d: int, kept: int
) -> List[ClaimReport]:
    """Rate-1/2 claims and, for kept < k, the punctured claims on one support."""
    k = kprime - 1
    w = len(set(support))
    reports = [check_claims_rate_half(j_profile(sidon, support, kprime), w, d, k)]
    if kept < k:
        reports.append(check_claims_punctured(j_profile(sidon, support, kprime, kept), w, d, k, kept))
    return reports
