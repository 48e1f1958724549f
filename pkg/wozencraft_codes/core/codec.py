"""Wozencraft code construction: alpha*, encoding, generator matrices, puncturing."""
from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_ARTIN_CAP_FACTOR
from ..utils.rng import XorShift64Star
from .cyclic import RingElement, reduce_mod_p, ring_mul
from .errors import BadLengthError, DegreeOverflowError, RateOutOfRangeError
from .galois import FieldDesc, field_from_order, field_tables, inv_code, mul_codes, sub_codes
from .params import CodeParams, find_artin_prime
from .sidon import bose_chowla, sidon_order

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

_RATE_PATTERN = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


@dataclass(frozen=True)
class PuncturePlan:
    requested_rate: Fraction
    k: int
    kept: int

    @property
    def achieved_rate(self) -> Fraction:
        return Fraction(self.k, self.k + self.kept)

    @property
    def exact(self) -> bool:
        return self.achieved_rate == self.requested_rate


@dataclass(frozen=True)
class GeneratorMatrix:
    """Systematic generator matrix; row i is the codeword of the message x^i."""

    q: int
    rows: np.ndarray

    @property
    def k(self) -> int:
        return int(self.rows.shape[0])

    @property
    def n(self) -> int:
        return int(self.rows.shape[1])

    @property
    def field(self) -> FieldDesc:
        return field_from_order(self.q)

    def encode(self, message: Sequence[int]) -> Vector:
        """Vector-matrix product over F_q."""
        if len(message) != self.k:
            raise BadLengthError(len(message), self.k)
        tables = field_tables(self.field)
        acc = np.zeros(self.n, dtype=np.int64)
        for coeff, row in zip(message, self.rows):
            if coeff:
                acc = tables.add[acc, tables.mul[int(coeff), row]]
        return tuple(int(c) for c in acc)

    def rank(self) -> int:
        """Rank over F_q by Gaussian elimination."""
        F = self.field
        m = [list(int(c) for c in row) for row in self.rows]
        rank = 0
        for col in range(self.n):
            pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            inv = inv_code(F, m[rank][col])
            m[rank] = [mul_codes(F, inv, c) for c in m[rank]]
            for r in range(len(m)):
                if r != rank and m[r][col]:
                    factor = m[r][col]
                    m[r] = [sub_codes(F, a, mul_codes(F, factor, b)) for a, b in zip(m[r], m[rank])]
            rank += 1
            if rank == len(m):
                break
        return rank

    def to_text(self) -> str:
        lines = [f"{self.q} {self.k} {self.n}"]
        lines.extend(" ".join(str(int(c)) for c in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def write(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_text(), encoding="utf-8")

    @classmethod
    def from_text(cls, text: str) -> "GeneratorMatrix":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise ValueError("empty generator matrix file")
        try:
            q, k, n = (int(tok) for tok in lines[0].split())
            rows = [[int(tok) for tok in line.split()] for line in lines[1:]]
        except ValueError as exc:
            raise ValueError(f"malformed generator matrix: {exc}") from exc
        if len(rows) != k or any(len(r) != n for r in rows):
            raise ValueError(f"generator matrix header says {k}x{n}, body disagrees")
        if any(not 0 <= c < q for r in rows for c in r):
            raise ValueError(f"generator matrix entries must lie in [0, {q})")
        return cls(q=q, rows=np.array(rows, dtype=np.int64).reshape(k, n))


def parse_rate(text: str) -> Fraction:
    """Parse an exact rational ``a/b``; floats are rejected."""
    match = _RATE_PATTERN.match(text)
    if not match:
        raise ValueError(f"rate must be an exact fraction a/b, got {text!r}")
    num, den = int(match.group(1)), int(match.group(2))
    if den == 0:
        raise ValueError("rate denominator must be nonzero")
    return Fraction(num, den)


def format_rate(rate: Fraction) -> str:
    return f"{rate.numerator}/{rate.denominator}"


def build_alpha_star(support: Iterable[int], k: int) -> Vector:
    """alpha* = sum of x^a over the Sidon set, as a length-k 0/1 vector."""
    elements = sorted(set(support))
    if elements and (elements[-1] >= k or elements[0] < 0):
        raise DegreeOverflowError(elements[-1], k)
    alpha = [0] * k
    for a in elements:
        alpha[a] = 1
    return tuple(alpha)


def puncture_plan(rate: Fraction, k: int) -> PuncturePlan:
    """Keep m = ceil((1/r - 1) k) check coordinates, so the achieved rate is at most r."""
    rate = Fraction(rate)
    if not Fraction(1, 2) < rate < 1:
        raise RateOutOfRangeError(rate)
    kept = math.ceil((1 / rate - 1) * k)
    plan = PuncturePlan(requested_rate=rate, k=k, kept=kept)
    if not plan.exact:
        logger.info("rate %s not exact at k=%d; keeping %d checks (rate %s)", rate, k, kept, plan.achieved_rate)
    return plan


def construct_code(
    q: int,
    k_min: int,
    rate: Optional[Fraction] = None,
    cap_factor: int = DEFAULT_ARTIN_CAP_FACTOR,
) -> CodeParams:
    """Artin prime, Sidon order, Bose-Chowla set and alpha*, in that order."""
    kprime = find_artin_prime(q, k_min, cap_factor)
    k = kprime - 1
    d = sidon_order(k)
    sidon = bose_chowla(d)
    alpha = build_alpha_star(sidon.elements, k)
    kept = k if rate is None or rate == Fraction(1, 2) else puncture_plan(rate, k).kept
    logger.info("constructed q=%d k'=%d d=%d A=%s kept=%d", q, kprime, d, sidon.elements, kept)
    return CodeParams(q=q, kprime=kprime, d=d, sidon=sidon, alpha_coeffs=alpha, kept=kept)


def _check_message(message: Sequence[int], params: CodeParams) -> Vector:
    if len(message) != params.k:
        raise BadLengthError(len(message), params.k)
    if any(not 0 <= int(c) < params.q for c in message):
        raise ValueError(f"message symbols must lie in [0, {params.q})")
    return tuple(int(c) for c in message)


def check_block(message: Sequence[int], params: CodeParams, alpha: Optional[Sequence[int]] = None) -> Vector:
    """First ``kept`` coefficients of (alpha * y) mod p."""
    alpha = tuple(params.alpha_coeffs if alpha is None else alpha)
    if not any(alpha):
        raise ValueError("alpha must be nonzero")
    y = RingElement.embed(message, params.q, params.kprime)
    a = RingElement.embed(alpha, params.q, params.kprime)
    return reduce_mod_p(ring_mul(a, y))[: params.kept]


def encode(message: Sequence[int], params: CodeParams, alpha: Optional[Sequence[int]] = None) -> Vector:
    """Codeword (y, phi_r(alpha y mod p)) of length k + kept."""
    y = _check_message(message, params)
    return y + check_block(y, params, alpha)


def check_rows(params: CodeParams, alpha: Optional[Sequence[int]] = None) -> np.ndarray:
    """k x kept matrix whose row i is the check block of x^i."""
    alpha = tuple(params.alpha_coeffs if alpha is None else alpha)
    if not any(alpha):
        raise ValueError("alpha must be nonzero")
    base = RingElement.embed(alpha, params.q, params.kprime).coeffs
    rows = np.zeros((params.k, params.kept), dtype=np.int64)
    for i in range(params.k):
        # x^i * alpha is a cyclic shift in R
        shifted = RingElement(base[-i:] + base[:-i] if i else base, params.kprime, params.q)
        rows[i] = reduce_mod_p(shifted)[: params.kept]
    return rows


def generator_matrix(params: CodeParams, alpha: Optional[Sequence[int]] = None) -> GeneratorMatrix:
    identity = np.eye(params.k, dtype=np.int64)
    return GeneratorMatrix(q=params.q, rows=np.hstack([identity, check_rows(params, alpha)]))


def iter_random_alphas(q: int, k: int, seed: int) -> Iterator[Vector]:
    """Endless stream of uniform nonzero length-k vectors over F_q from one seed."""
    rng = XorShift64Star(seed)
    while True:
        alpha = tuple(rng.symbols(q, k))
        if any(alpha):
            yield alpha


def sample_random_alpha(params: CodeParams, seed: int) -> Vector:
    return next(iter_random_alphas(params.q, params.k, seed))


def sample_random_alphas(params: CodeParams, count: int, seed: int) -> List[Vector]:
    stream = iter_random_alphas(params.q, params.k, seed)
    return [next(stream) for _ in range(count)]


def message_from_code(code: int, q: int, k: int) -> Vector:
    """Inverse of the message integer code sum(y_i * q**i)."""
    digits = []
    for _ in range(k):
        code, r = divmod(code, q)
        digits.append(r)
    return tuple(digits)


def parse_message(text: str) -> Vector:
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")
    except ValueError as exc:
        raise ValueError(f"message must be comma-separated integers: {exc}") from exc
