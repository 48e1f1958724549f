"""Exact arithmetic in prime fields F_p and extension fields F_{p^e}.

Elements are stored as integer codes: the polynomial ``sum(c_i * t**i)`` over
the monomial basis maps to ``sum(c_i * p**i)``. Every field is built with a
canonical modulus (the lexicographically smallest monic irreducible,
low-degree coefficients compared first), so every derived artifact is
reproducible bit for bit.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Literal, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import MAX_FIELD_ORDER
from .errors import (
    FieldMismatchError,
    NotAUnitError,
    NotPrimeError,
    OrderTooLargeError,
    ZeroInverseError,
)

logger = logging.getLogger(__name__)

Poly = Tuple[int, ...]

# Largest field for which add/mul lookup tables are materialised.
MAX_TABLE_ORDER = 4096


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> List[int]:
    """Prime factors of ``n`` with multiplicity, ascending. ``factorize(1) == []``."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    factors: List[int] = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def prime_power_root(q: int) -> Optional[Tuple[int, int]]:
    """Return ``(p, e)`` with ``p**e == q`` or ``None`` if q is not a prime power."""
    if q < 2:
        return None
    factors = factorize(q)
    if len(set(factors)) != 1:
        return None
    return factors[0], len(factors)


# ----------------------------------------------------------------------------
# Polynomials over F_p, coefficient tuples low degree first


def _poly_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    size = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(size)]
    return _poly_trim(out)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int]]:
    rem = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(rem) - len(b) + 1, 0)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = (rem[-1] * inv_lead) % p
        quot[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * bi) % p
        _poly_trim(rem)
    return _poly_trim(quot), rem


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    return _poly_divmod(a, b, p)[1]


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv_lead = pow(a[-1], -1, p)
        a = [(c * inv_lead) % p for c in a]
    return a


def _poly_powmod(base: Sequence[int], exponent: int, modulus: Sequence[int], p: int) -> List[int]:
    result: List[int] = [1]
    base = _poly_mod(base, modulus, p)
    while exponent:
        if exponent & 1:
            result = _poly_mod(_poly_mul(result, base, p), modulus, p)
        base = _poly_mod(_poly_mul(base, base, p), modulus, p)
        exponent >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree e over F_p."""
    f = _poly_trim(list(f))
    e = len(f) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p**e, f, p), x, p):
        return False
    for ell in sorted(set(factorize(e))):
        h = _poly_sub(_poly_powmod(x, p ** (e // ell), f, p), x, p)
        if len(_poly_gcd(h, f, p)) != 1:
            return False
    return True


# ----------------------------------------------------------------------------
# Fields


@dataclass(frozen=True)
class FieldDesc:
    """A finite field F_{p^e} with its canonical modulus."""

    p: int
    e: int
    modulus: Poly = ()

    @property
    def order(self) -> int:
        return self.p**self.e

    @property
    def q(self) -> int:
        return self.order

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} outside [0, {self.order})")
        return FieldElement(code, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(c, self) for c in range(self.order)]

    def __str__(self) -> str:
        if self.e == 1:
            return f"F_{self.p}"
        return f"F_{self.order} (modulus {format_poly(self.modulus)})"


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Render a low-degree-first coefficient list, e.g. ``(1, 0, 1)`` -> ``x^2 + 1``."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "1" if i == 0 else var if i == 1 else f"{var}^{i}"
        if c == 1 or i == 0:
            terms.append(str(c) if i == 0 else mono)
        else:
            terms.append(f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def field_make(p: int, e: int = 1, max_order: int = MAX_FIELD_ORDER) -> FieldDesc:
    """Build F_{p^e} with the canonical modulus.

    Candidates ``x^e + c_{e-1} x^{e-1} + ... + c_0`` are enumerated with
    ``(c_0, c_1, ...)`` in lexicographic order and the first irreducible one
    is taken.
    """
    if not is_prime(p):
        raise NotPrimeError(p)
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    order = p**e
    if order > max_order:
        raise OrderTooLargeError(order, max_order)
    if e == 1:
        return FieldDesc(p, 1, ())
    for low in itertools.product(range(p), repeat=e):
        candidate = tuple(low) + (1,)
        if low[0] == 0:
            continue  # divisible by x
        if is_irreducible(candidate, p):
            logger.debug("F_%d modulus %s", order, format_poly(candidate))
            return FieldDesc(p, e, candidate)
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


def field_from_order(q: int, max_order: int = MAX_FIELD_ORDER) -> FieldDesc:
    """Build F_q for a prime power q."""
    root = prime_power_root(q)
    if root is None:
        raise NotPrimeError(q)
    return field_make(root[0], root[1], max_order)


def _to_digits(code: int, p: int, e: int) -> List[int]:
    digits = []
    for _ in range(e):
        code, r = divmod(code, p)
        digits.append(r)
    return digits


def _from_digits(digits: Sequence[int], p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def add_codes(F: FieldDesc, a: int, b: int) -> int:
    if F.e == 1:
        return (a + b) % F.p
    da, db = _to_digits(a, F.p, F.e), _to_digits(b, F.p, F.e)
    return _from_digits([(x + y) % F.p for x, y in zip(da, db)], F.p)


def neg_code(F: FieldDesc, a: int) -> int:
    if F.e == 1:
        return (-a) % F.p
    return _from_digits([(-x) % F.p for x in _to_digits(a, F.p, F.e)], F.p)


def sub_codes(F: FieldDesc, a: int, b: int) -> int:
    return add_codes(F, a, neg_code(F, b))


def mul_codes(F: FieldDesc, a: int, b: int) -> int:
    if F.e == 1:
        return (a * b) % F.p
    product = _poly_mul(_to_digits(a, F.p, F.e), _to_digits(b, F.p, F.e), F.p)
    reduced = _poly_mod(product, F.modulus, F.p)
    return _from_digits(reduced + [0] * (F.e - len(reduced)), F.p)


def pow_code(F: FieldDesc, a: int, n: int) -> int:
    """Square-and-multiply; negative exponents go through the inverse."""
    if n < 0:
        return pow_code(F, inv_code(F, a), -n)
    result, base = 1, a
    while n:
        if n & 1:
            result = mul_codes(F, result, base)
        base = mul_codes(F, base, base)
        n >>= 1
    return result


def inv_code(F: FieldDesc, a: int) -> int:
    if a == 0:
        raise ZeroInverseError()
    if F.e == 1:
        return pow(a, -1, F.p)
    return pow_code(F, a, F.order - 2)


@dataclass(frozen=True)
class FieldElement:
    """An element of a FieldDesc, stored as its integer code."""

    code: int
    field: FieldDesc

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise FieldMismatchError(self.field, other.field)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(add_codes(self.field, self.code, other.code), self.field)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(sub_codes(self.field, self.code, other.code), self.field)

    def __neg__(self) -> "FieldElement":
        return FieldElement(neg_code(self.field, self.code), self.field)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(mul_codes(self.field, self.code, other.code), self.field)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        return FieldElement(pow_code(self.field, self.code, n), self.field)

    def inverse(self) -> "FieldElement":
        return FieldElement(inv_code(self.field, self.code), self.field)

    def __int__(self) -> int:
        return self.code

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.code}, F_{self.field.order})"


FieldOp = Literal["add", "sub", "mul", "inv", "pow"]


def field_arith(
    a: FieldElement, b: Optional[FieldElement] = None, op: FieldOp = "add", n: int = 0
) -> FieldElement:
    """Dispatch a named field operation; ``inv`` ignores b and ``pow`` uses n."""
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a**n
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown field operation {op!r}")


def multiplicative_order(g: Union[FieldElement, int], modulus: Optional[int] = None) -> int:
    """Least d >= 1 with g^d = 1.

    ``g`` is either a FieldElement (group order q - 1) or an integer residue
    taken modulo ``modulus`` (group order phi(modulus)). The order is found by
    stripping prime factors off the group order.
    """
    if isinstance(g, FieldElement):
        if g.code == 0:
            raise NotAUnitError(g.code, g.field)
        group_order = g.field.order - 1
        F = g.field

        def power_is_one(d: int) -> bool:
            return pow_code(F, g.code, d) == 1

    else:
        if modulus is None or modulus < 1:
            raise ValueError("an integer residue needs a positive modulus")
        residue = g % modulus
        if math.gcd(residue, modulus) != 1:
            raise NotAUnitError(g, modulus)
        group_order = euler_phi(modulus)

        def power_is_one(d: int) -> bool:
            return pow(residue, d, modulus) == 1 % modulus

    d = group_order
    for ell in sorted(set(factorize(group_order))) if group_order > 1 else []:
        while d % ell == 0 and power_is_one(d // ell):
            d //= ell
    return d


def euler_phi(n: int) -> int:
    result = n
    for ell in set(factorize(n)):
        result -= result // ell
    return result


def is_primitive(g: FieldElement) -> bool:
    if g.code == 0:
        return False
    n = g.field.order - 1
    return all(pow_code(g.field, g.code, n // ell) != 1 for ell in set(factorize(n))) if n > 1 else True


def find_primitive_root(F: FieldDesc) -> FieldElement:
    """Smallest-code generator of F*. For F_2 the trivial group gives code 1."""
    if F.order == 2:
        return F.one()
    for code in range(2, F.order):
        g = FieldElement(code, F)
        if is_primitive(g):
            logger.debug("primitive root of F_%d: code %d", F.order, code)
            return g
    raise AssertionError(f"{F} has no primitive root")


@dataclass(frozen=True)
class FieldTables:
    """Dense lookup tables for vectorised arithmetic over a small field."""

    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    sub: np.ndarray


@lru_cache(maxsize=32)
def field_tables(F: FieldDesc) -> FieldTables:
    q = F.order
    if q > MAX_TABLE_ORDER:
        raise OrderTooLargeError(q, MAX_TABLE_ORDER)
    dtype = np.uint16 if q > 256 else np.uint8
    if F.e == 1:
        r = np.arange(q, dtype=np.int64)
        add = (r[:, None] + r[None, :]) % q
        mul = (r[:, None] * r[None, :]) % q
    else:
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                add[a, b] = add[b, a] = add_codes(F, a, b)
                mul[a, b] = mul[b, a] = mul_codes(F, a, b)
    neg = np.array([neg_code(F, a) for a in range(q)], dtype=np.int64)
    sub = add[:, neg]
    tables = FieldTables(
        add=add.astype(dtype),
        mul=mul.astype(dtype),
        neg=neg.astype(dtype),
        sub=sub.astype(dtype),
    )
    for array in (tables.add, tables.mul, tables.neg, tables.sub):
        array.setflags(write=False)
    return tables
