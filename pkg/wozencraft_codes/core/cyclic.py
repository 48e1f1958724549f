"""Arithmetic in R = F_q[x]/(x^k' - 1) and its quotient F_{q^k} = R/(p).

Ring elements are length-k' coefficient vectors; elements of F_{q^k} are
plain length-k prefixes, so reduction and the coefficient maps stay literal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .errors import BadLengthError, BadTruncationError, ContextMismatchError
from .galois import (
    MAX_TABLE_ORDER,
    FieldDesc,
    add_codes,
    field_from_order,
    field_tables,
    mul_codes,
    sub_codes,
)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class RingElement:
    """Element of F_q[x]/(x^k' - 1); ``coeffs[i]`` is the coefficient of x^i."""

    coeffs: Vector
    kprime: int
    q: int

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.kprime:
            raise BadLengthError(len(self.coeffs), self.kprime, "ring element")
        if any(not 0 <= c < self.q for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.q})")

    @property
    def k(self) -> int:
        return self.kprime - 1

    @property
    def field(self) -> FieldDesc:
        return field_from_order(self.q)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    @classmethod
    def zero(cls, q: int, kprime: int) -> "RingElement":
        return cls((0,) * kprime, kprime, q)

    @classmethod
    def one(cls, q: int, kprime: int) -> "RingElement":
        return cls.monomial(0, q, kprime)

    @classmethod
    def monomial(cls, j: int, q: int, kprime: int, coeff: int = 1) -> "RingElement":
        coeffs = [0] * kprime
        coeffs[j % kprime] = coeff
        return cls(tuple(coeffs), kprime, q)

    @classmethod
    def embed(cls, vector: Sequence[int], q: int, kprime: int) -> "RingElement":
        """Lift a length-k field element into R with a zero top coefficient."""
        if len(vector) != kprime - 1:
            raise BadLengthError(len(vector), kprime - 1, "field element")
        return cls(tuple(int(v) for v in vector) + (0,), kprime, q)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ring_mul(self, other)

    def __add__(self, other: "RingElement") -> "RingElement":
        _check_context(self, other)
        F = self.field
        return RingElement(
            tuple(add_codes(F, a, b) for a, b in zip(self.coeffs, other.coeffs)), self.kprime, self.q
        )


@dataclass(frozen=True)
class Weights:
    wt_tilde: int
    wt: int
    wt_r: Optional[int] = None


@dataclass(frozen=True)
class WeightRelation:
    """Both weight relation inequalities evaluated on one ring element."""

    wt_tilde: int
    wt: int
    full_bound: int
    holds_full: bool
    truncated_weight: Optional[int] = None
    truncated_bound: Optional[int] = None
    holds_truncated: bool = True

    @property
    def holds(self) -> bool:
        return self.holds_full and self.holds_truncated


def _check_context(f: RingElement, g: RingElement) -> None:
    if (f.q, f.kprime) != (g.q, g.kprime):
        raise ContextMismatchError((f.q, f.kprime), (g.q, g.kprime))


def cyclic_convolve(f: Sequence[int], g: Sequence[int], F: FieldDesc) -> Vector:
    """Coefficient j = sum over i + l = j (mod n) of f_i * g_l in F_q."""
    n = len(f)
    if F.order <= MAX_TABLE_ORDER:
        tables = field_tables(F)
        g_arr = np.asarray(g, dtype=np.int64)
        out = np.zeros(n, dtype=np.int64)
        for i, fi in enumerate(f):
            if fi:
                term = tables.mul[fi, np.roll(g_arr, i)]
                out = tables.add[out, term]
        return tuple(int(c) for c in out)
    out_list = [0] * n
    for i, fi in enumerate(f):
        if not fi:
            continue
        for l, gl in enumerate(g):
            if gl:
                j = (i + l) % n
                out_list[j] = add_codes(F, out_list[j], mul_codes(F, fi, gl))
    return tuple(out_list)


def ring_mul(f: RingElement, g: RingElement) -> RingElement:
    _check_context(f, g)
    return RingElement(cyclic_convolve(f.coeffs, g.coeffs, f.field), f.kprime, f.q)


def reduce_mod_p(f: RingElement) -> Vector:
    """f mod p = f - b_k p: entry i is b_i - b_k, for i < k."""
    F = f.field
    top = f.coeffs[-1]
    if top == 0:
        return f.coeffs[:-1]
    return tuple(sub_codes(F, b, top) for b in f.coeffs[:-1])


def hamming_weight(vector: Iterable[int]) -> int:
    return sum(1 for c in vector if c)


def weights(f: RingElement, m: Optional[int] = None) -> Weights:
    """w~t over all k' coefficients, wt of f mod p, and wt_r of its first m entries."""
    reduced = reduce_mod_p(f)
    wt_r = None
    if m is not None:
        if not 0 < m <= f.k:
            raise BadTruncationError(m, f.k)
        wt_r = hamming_weight(reduced[:m])
    return Weights(wt_tilde=hamming_weight(f.coeffs), wt=hamming_weight(reduced), wt_r=wt_r)


def check_weight_relation(f: RingElement, m: Optional[int] = None) -> WeightRelation:
    """Evaluate wt(f mod p) >= min{w~t(f), k - w~t(f)} and, for m, the truncated form
    wt_r(f mod p) >= min{wt_r(f), m - wt_r(f)} with wt_r(f) read off the unreduced f."""
    w = weights(f, m)
    full_bound = min(w.wt_tilde, f.k - w.wt_tilde)
    relation = WeightRelation(
        wt_tilde=w.wt_tilde, wt=w.wt, full_bound=full_bound, holds_full=w.wt >= full_bound
    )
    if m is None:
        return relation
    raw = hamming_weight(f.coeffs[:m])
    bound = min(raw, m - raw)
    assert w.wt_r is not None
    return WeightRelation(
        wt_tilde=w.wt_tilde,
        wt=w.wt,
        full_bound=full_bound,
        holds_full=w.wt >= full_bound,
        truncated_weight=w.wt_r,
        truncated_bound=bound,
        holds_truncated=w.wt_r >= bound,
    )


# ----------------------------------------------------------------------------
# F_{q^k} by schoolbook multiplication and long division by p(x)


def field_multiply(a: Sequence[int], b: Sequence[int], q: int, kprime: int) -> Vector:
    """Multiply two length-k vectors in F_q[x]/(p(x)), p = 1 + x + ... + x^k.

    Independent of the cyclic ring: full product, then division by p.
    """
    k = kprime - 1
    if len(a) != k or len(b) != k:
        raise BadLengthError(len(a) if len(a) != k else len(b), k, "field element")
    F = field_from_order(q)
    product = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                product[i + j] = add_codes(F, product[i + j], mul_codes(F, ai, bj))
    # p is monic of degree k with all coefficients 1
    for top in range(len(product) - 1, k - 1, -1):
        factor = product[top]
        if factor == 0:
            continue
        for i in range(top - k, top + 1):
            product[i] = sub_codes(F, product[i], factor)
    return tuple(product[:k])

