"""q-ary entropy and the Gilbert-Varshamov relative distance."""
import math
from numbers import Real

from .models import GVReport

BISECTION_TOLERANCE = 1e-9


def q_ary_entropy(x: float, q: int) -> float:
    """h_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with 0 log 0 = 0."""
    if not 0 <= x <= 1:
        raise ValueError(f"entropy argument must lie in [0, 1], got {x}")
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    log_q = math.log(q)
    value = x * math.log(q - 1) / log_q if q > 2 else 0.0
    if 0 < x:
        value -= x * math.log(x) / log_q
    if x < 1:
        value -= (1 - x) * math.log(1 - x) / log_q
    return value


def gv_relative_distance(rate: Real, q: int, tolerance: float = BISECTION_TOLERANCE) -> float:
    """h_q^{-1}(1 - rate) on [0, 1 - 1/q], where h_q is increasing."""
    target = 1 - float(rate)
    lo, hi = 0.0, 1 - 1 / q
    if target <= 0:
        return 0.0
    if target >= 1:
        return hi
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        if q_ary_entropy(mid, q) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def gv_report(q: int, n: int, rate: Real) -> GVReport:
    if not 0 < rate < 1:
        raise ValueError(f"rate must lie in (0, 1), got {rate}")
    delta = gv_relative_distance(rate, q)
    return GVReport(q=q, n=n, rate=float(rate), target_entropy=1 - float(rate), relative_distance=delta)
