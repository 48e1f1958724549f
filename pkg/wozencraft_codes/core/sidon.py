"""Bose-Chowla Sidon sets, Sidon verification and window-count bounds."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..config import FLOAT_SLACK
from .errors import BoundViolationError, DegreeOverflowError, NoPrimeError, NotPrimeError
from .galois import add_codes, field_make, find_primitive_root, is_prime, mul_codes

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class SidonSet:
    """A Sidon set modulo ``p**2 - 1`` with the generator that produced it.

    ``generator_code`` is None for a set that was loaded rather than built.
    """

    p: int
    elements: Tuple[int, ...]
    generator_code: Optional[int] = None

    @property
    def modulus(self) -> int:
        return self.p * self.p - 1

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def length(self) -> int:
        return self.elements[-1] - self.elements[0] if self.elements else 0

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: int) -> bool:
        return item in self.elements


@dataclass(frozen=True)
class SidonVerdict:
    """Outcome of a Sidon check; ``witness`` holds two pairs with equal differences."""

    ok: bool
    witness: Optional[Tuple[Pair, Pair]] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class WindowCount:
    count: int
    lower: float
    upper: float


def largest_prime_below(x: float) -> int:
    """Largest prime strictly less than x."""
    if x <= 2:
        raise NoPrimeError(x)
    n = math.ceil(x) - 1
    while n >= 2:
        if is_prime(n):
            return n
        n -= 1
    raise NoPrimeError(x)


def sidon_order(k: int) -> int:
    """Largest prime d with d < sqrt(k), computed exactly as d*d < k."""
    d = math.isqrt(k)
    if d * d == k:
        d -= 1
    while d >= 2:
        if is_prime(d):
            return d
        d -= 1
    raise NoPrimeError(math.sqrt(k))


def bose_chowla(p: int) -> SidonSet:
    """The p-element set ``{i in [1, p^2 - 2] : g^i + g^(p*i) = 1}`` in F_{p^2}.

    ``g`` is the canonical primitive root of the canonical F_{p^2}.
    """
    if not is_prime(p):
        raise NotPrimeError(p)
    F = field_make(p, 2)
    g = find_primitive_root(F)
    n = p * p - 1

    powers = [1] * n
    for i in range(1, n):
        powers[i] = mul_codes(F, powers[i - 1], g.code)

    elements = tuple(i for i in range(1, n) if add_codes(F, powers[i], powers[(p * i) % n]) == 1)
    if len(elements) != p:
        raise AssertionError(f"Bose-Chowla over F_{p * p} produced {len(elements)} elements, expected {p}")
    logger.debug("bose_chowla(%d) = %s (generator code %d)", p, elements, g.code)
    return SidonSet(p=p, elements=elements, generator_code=g.code)


def verify_sidon(elements: Iterable[int], n: Optional[int] = None) -> SidonVerdict:
    """Check that all differences of distinct elements are distinct (mod n when given).

    Positive differences are scanned first, so an integer collision is
    reported as ``((a, b), (c, d))`` with ``a > b`` and ``c > d``.
    """
    values = sorted(set(elements))
    seen: Dict[int, Pair] = {}
    ordered: List[Pair] = [(a, b) for i, a in enumerate(values) for b in values[:i]]
    ordered += [(b, a) for a, b in ordered]
    for a, b in ordered:
        diff = (a - b) % n if n is not None else a - b
        if diff in seen:
            return SidonVerdict(False, (seen[diff], (a, b)))
        seen[diff] = (a, b)
    return SidonVerdict(True)


def lindstrom_bound(m: float) -> float:
    """Upper bound on the order of a Sidon set of length m: sqrt(m) + m^(1/4) + 1."""
    if m <= 0:
        return 1.0
    return math.sqrt(m) + m**0.25 + 1


def trivial_order_bound(length: int) -> float:
    """Order bound from the C(d, 2) distinct positive differences fitting in ``length``."""
    return (1 + math.sqrt(1 + 8 * length)) / 2


def window_counts(elements: Sequence[int], m: int, n: int, cyclic: bool = False) -> List[int]:
    """Number of elements in each window ``[s, s + m)`` of ``[0, n)``.

    Non-cyclic windows start at 0..n-m; cyclic ones at 0..n-1 and wrap.
    """
    hits = [0] * n
    for a in elements:
        hits[a % n] += 1
    if cyclic:
        extended = hits + hits[: m - 1]
        starts = n
    else:
        extended = hits
        starts = n - m + 1
    prefix = [0]
    for h in extended:
        prefix.append(prefix[-1] + h)
    return [prefix[s + m] - prefix[s] for s in range(max(starts, 0))]


def max_window_count(elements: Sequence[int], m: int, n: int, cyclic: bool = False) -> int:
    counts = window_counts(elements, m, n, cyclic)
    return max(counts) if counts else 0


def window_count_bounds(
    sidon: Sequence[int],
    shift: int,
    m: int,
    kprime: int,
    slack: float = FLOAT_SLACK,
) -> WindowCount:
    """Count ``|{a in A : (s + a) mod k' < m}|`` and check it against the window lemma.

    lower = d - (sqrt(k - m) + (k - m)^(1/4) + 2), upper = sqrt(m) + m^(1/4) + 1.
    """
    elements = tuple(sidon)
    k = kprime - 1
    if not 0 < m <= kprime:
        raise ValueError(f"window must satisfy 0 < m <= {kprime}, got {m}")
    if elements and max(elements) > k - 2:
        raise DegreeOverflowError(max(elements), k - 1)
    d = len(elements)
    count = sum(1 for a in elements if (shift + a) % kprime < m)
    rest = max(k - m, 0)
    lower = d - (math.sqrt(rest) + rest**0.25 + 2)
    upper = lindstrom_bound(m)
    if not (lower - slack <= count <= upper + slack):
        raise BoundViolationError(count, lower, upper, shift, m)
    return WindowCount(count=count, lower=lower, upper=upper)
