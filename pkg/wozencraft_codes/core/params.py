"""Code parameters: Artin primes k', the cyclotomic modulus and CodeParams."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from ..config import DEFAULT_ARTIN_CAP_FACTOR
from .cyclic import RingElement, reduce_mod_p
from .errors import NotPrimeError, SearchExhaustedError
from .galois import FieldDesc, field_from_order, is_prime, multiplicative_order, prime_power_root
from .sidon import SidonSet, verify_sidon

logger = logging.getLogger(__name__)

# Largest k' for which verify_irreducible also runs the ring-level check.
RING_CHECK_LIMIT = 4096
# Skipped candidates re-examined after each Artin prime search.
SKIP_SPOT_CHECKS = 10


@dataclass(frozen=True)
class CodeParams:
    """Everything needed to re-derive a (possibly punctured) Wozencraft code."""

    q: int
    kprime: int
    d: int
    sidon: SidonSet
    alpha_coeffs: Tuple[int, ...]
    kept: int

    @property
    def k(self) -> int:
        return self.kprime - 1

    @property
    def n(self) -> int:
        return self.k + self.kept

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.k + self.kept)

    @property
    def is_rate_half(self) -> bool:
        return self.kept == self.k

    @property
    def field(self) -> FieldDesc:
        return field_from_order(self.q)

    @property
    def is_alpha_star(self) -> bool:
        support = tuple(i for i, c in enumerate(self.alpha_coeffs) if c)
        return support == self.sidon.elements and all(
            c == 1 for c in self.alpha_coeffs if c
        )

    def with_alpha(self, alpha: Tuple[int, ...]) -> "CodeParams":
        return replace(self, alpha_coeffs=tuple(alpha))

    def with_kept(self, kept: int) -> "CodeParams":
        return replace(self, kept=kept)


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Verdict on p(x) = 1 + x + ... + x^(k'-1) over F_q.

    ``order`` is the multiplicative order of q mod k' (None when q is not a
    unit); it doubles as the failure witness. ``ring_consistent`` records the
    redundant ring-level check, None when skipped for size.
    """

    q: int
    kprime: int
    irreducible: bool
    order: Optional[int]
    ring_consistent: Optional[bool] = None

    @property
    def witness(self) -> Optional[int]:
        return None if self.irreducible else self.order

    def __bool__(self) -> bool:
        return self.irreducible


def _is_artin_prime(q: int, candidate: int) -> bool:
    if not is_prime(candidate) or q % candidate == 0:
        return False
    return multiplicative_order(q, candidate) == candidate - 1


def find_artin_prime(q: int, k_min: int, cap_factor: int = DEFAULT_ARTIN_CAP_FACTOR) -> int:
    """Smallest prime k' > k_min with q a primitive root mod k'.

    Candidates are scanned in ascending order up to ``k_min * cap_factor``.
    """
    if prime_power_root(q) is None:
        raise NotPrimeError(q)
    if k_min < 2:
        raise ValueError(f"k_min must be >= 2, got {k_min}")
    bound = k_min * cap_factor
    for candidate in range(k_min + 1, bound + 1):
        if _is_artin_prime(q, candidate):
            logger.debug("Artin prime for q=%d above %d: %d", q, k_min, candidate)
            recheck_skipped(q, k_min, candidate)
            return candidate
    raise SearchExhaustedError(q, k_min, bound)


def skipped_candidates(q: int, k_min: int, kprime: int) -> List[int]:
    """Integers in (k_min, k') the search passed over."""
    return [c for c in range(k_min + 1, kprime) if not _is_artin_prime(q, c)]


def recheck_skipped(q: int, k_min: int, kprime: int, samples: int = SKIP_SPOT_CHECKS, seed: int = 0) -> List[int]:
    """Confirm by direct powering that sampled skipped candidates do not qualify.

    Returns the candidates examined, at most ``samples`` of them.
    """
    skipped = skipped_candidates(q, k_min, kprime)
    if len(skipped) > samples:
        rng = np.random.default_rng(seed)
        skipped = sorted(int(c) for c in rng.choice(skipped, size=samples, replace=False))
    for candidate in skipped:
        if _qualifies_by_powering(q, candidate):
            raise AssertionError(f"skipped candidate {candidate} is an Artin prime for q={q}")
    return skipped


def _qualifies_by_powering(q: int, candidate: int) -> bool:
    if candidate < 3 or any(candidate % f == 0 for f in range(2, math.isqrt(candidate) + 1)):
        return False
    x = q % candidate
    if x == 0:
        return False
    order = 1
    while x != 1:
        x = x * q % candidate
        order += 1
    return order == candidate - 1


def cyclotomic_modulus(kprime: int) -> Tuple[int, ...]:
    """Coefficients of 1 + x + ... + x^(k'-1), low degree first."""
    if kprime < 2:
        raise ValueError(f"k' must be >= 2, got {kprime}")
    return (1,) * kprime


def _ring_check(q: int, kprime: int, order: int) -> bool:
    """x^k' = 1 and x^j != 1 for 0 < j < k' in F_q[x]/(p), and the Frobenius
    orbit of x (x -> x^q) has length equal to the order of q mod k'."""
    k = kprime - 1
    one = (1,) + (0,) * (k - 1)

    def monomial_mod_p(j: int) -> Tuple[int, ...]:
        return reduce_mod_p(RingElement.monomial(j, q, kprime))

    if monomial_mod_p(kprime) != one:
        return False
    if any(monomial_mod_p(j) == one for j in range(1, kprime)):
        return False
    x = monomial_mod_p(1)
    exponent, orbit = q % kprime, 1
    while monomial_mod_p(exponent) != x:
        exponent = (exponent * q) % kprime
        orbit += 1
        if orbit > kprime:
            return False
    return orbit == order


def verify_irreducible(q: int, kprime: int, ring_check_limit: int = RING_CHECK_LIMIT) -> IrreducibilityCertificate:
    """p(x) is irreducible over F_q iff q has order k' - 1 modulo the prime k'."""
    if not is_prime(kprime):
        raise NotPrimeError(kprime)
    if q % kprime == 0:
        return IrreducibilityCertificate(q, kprime, False, None)
    order = multiplicative_order(q, kprime)
    ring_consistent = _ring_check(q, kprime, order) if kprime <= ring_check_limit else None
    if ring_consistent is False:
        logger.warning("ring-level irreducibility check disagrees for q=%d, k'=%d", q, kprime)
    return IrreducibilityCertificate(q, kprime, order == kprime - 1, order, ring_consistent)


def validate_params(params: CodeParams) -> List[str]:
    """Every semantic invariant of CodeParams; returns the list of violations."""
    problems: List[str] = []
    q, kprime, k, d = params.q, params.kprime, params.k, params.d
    if prime_power_root(q) is None:
        problems.append(f"q={q} is not a prime power")
        return problems
    if not is_prime(kprime):
        problems.append(f"kprime={kprime} is not prime")
    elif not _is_artin_prime(q, kprime):
        problems.append(f"q={q} is not a primitive root modulo kprime={kprime}")
    if not is_prime(d):
        problems.append(f"d={d} is not prime")
    if d * d > k:
        problems.append(f"d^2={d * d} exceeds k={k}")
    sidon = params.sidon
    if sidon.p != d:
        problems.append(f"Sidon set order parameter {sidon.p} differs from d={d}")
    if len(sidon.elements) != d:
        problems.append(f"Sidon set has {len(sidon.elements)} elements, expected {d}")
    if list(sidon.elements) != sorted(set(sidon.elements)):
        problems.append("Sidon elements must be strictly increasing")
    if sidon.elements and not (1 <= sidon.elements[0] and sidon.elements[-1] <= d * d - 2):
        problems.append(f"Sidon elements must lie in [1, {d * d - 2}]")
    if not verify_sidon(sidon.elements, sidon.modulus):
        problems.append(f"Sidon set is not Sidon modulo {sidon.modulus}")
    if len(params.alpha_coeffs) != k:
        problems.append(f"alpha has {len(params.alpha_coeffs)} coefficients, expected k={k}")
    if any(not 0 <= c < q for c in params.alpha_coeffs):
        problems.append(f"alpha coefficients must lie in [0, {q})")
    if not any(params.alpha_coeffs):
        problems.append("alpha must be nonzero")
    if not 0 < params.kept <= k:
        problems.append(f"kept={params.kept} must satisfy 0 < kept <= {k}")
    return problems


def bertrand_holds(d: int, k: int) -> bool:
    """The Sidon order satisfies d >= sqrt(k) / 2."""
    return 2 * d >= math.sqrt(k)
