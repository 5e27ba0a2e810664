"""Finite subsets of Z and their arithmetic classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ..errors import (
    BadParameters,
    CardinalityNotPrime,
    DoesNotGenerate,
    DuplicateElements,
    ModulusTooSmall,
    SetParseError,
)
from ..intpoly import (
    IntPoly,
    count_unit_circle_roots,
    cyclotomic,
    cyclotomic_divisors,
    divides,
    euler_phi,
    poly_gcd,
)


@dataclass(frozen=True)
class ZSet:
    """Finite subset of Z translated so that its minimum is 0."""

    elements: tuple[int, ...]

    def __post_init__(self):
        els = self.elements
        if not els or els[0] != 0 or any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError("ZSet elements must be sorted, distinct and start at 0")

    @property
    def generates(self) -> bool:
        return math.gcd(*self.elements[1:]) == 1 if len(self.elements) > 1 else False

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def diameter(self) -> int:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def to_json(self) -> list[int]:
        return list(self.elements)


def normalize_set(raw: Iterable[int]) -> ZSet:
    vals = [int(v) for v in raw]
    if not vals:
        raise BadParameters("a set needs at least one element")
    if len(set(vals)) != len(vals):
        raise DuplicateElements(f"duplicate elements in {vals}")
    lo = min(vals)
    return ZSet(tuple(sorted(v - lo for v in vals)))


def parse_set(text: str) -> ZSet:
    """Parse ``"0,1,3"`` (brackets and whitespace tolerated)."""
    body = text.strip().strip("[]{}")
    try:
        vals = [int(tok) for tok in body.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise SetParseError(f"cannot parse set {text!r}") from exc
    if not vals:
        raise SetParseError(f"empty set {text!r}")
    return normalize_set(vals)


def as_zset(k) -> ZSet:
    return k if isinstance(k, ZSet) else normalize_set(k)


def mask_polynomial(k) -> IntPoly:
    return IntPoly.from_exponents(as_zset(k).elements)


def _require_generating(k: ZSet) -> None:
    if not k.generates:
        raise DoesNotGenerate(f"{list(k.elements)} does not generate Z")


def is_b_arithmetic(k) -> tuple[bool, int]:
    """``(b-arithmetic?, number of distinct unit-circle roots of the mask)``."""
    k = as_zset(k)
    _require_generating(k)
    count = count_unit_circle_roots(mask_polynomial(k))
    return count > 0, count


def is_p_arithmetic(k) -> int | None:
    """Smallest ``m >= 2`` with ``cyclotomic(m)`` dividing the mask, else ``None``."""
    k = as_zset(k)
    _require_generating(k)
    p = mask_polynomial(k)
    deg = p.degree
    for m in range(2, 2 * deg * deg + 1):
        if euler_phi(m) <= deg and divides(cyclotomic(m), p):
            return m
    return None


def _prime_power_base(q: int) -> int | None:
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return p if q == 1 else None


@dataclass(frozen=True)
class CovenMeyerowitzReport:
    R: tuple[int, ...]
    S: tuple[int, ...]
    T1: bool
    T2: bool
    mask_at_one: int
    prime_power_product: int
    T2_failure: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        return {
            "R_K": list(self.R),
            "S_K": list(self.S),
            "T1": self.T1,
            "T2": self.T2,
            "P_K(1)": self.mask_at_one,
            "prod_S_Phi_s(1)": self.prime_power_product,
            "T2_failure": list(self.T2_failure) if self.T2_failure else None,
        }


def coven_meyerowitz_report(k) -> CovenMeyerowitzReport:
    """Evaluate the two Coven-Meyerowitz conditions for ``k``.

    ``Phi_{p^a}(1) = p`` gives the T1 product. T2 checks every combination of
    prime powers with distinct bases, by direct trial division of the
    product's cyclotomic polynomial.
    """
    k = as_zset(k)
    p = mask_polynomial(k)
    r = tuple(m for m in cyclotomic_divisors(p) if m >= 2)
    s = tuple(q for q in r if _prime_power_base(q))
    prod = math.prod(_prime_power_base(q) for q in s)
    t1 = p(1) == prod
    t2, failure = True, None
    for size in range(2, len(s) + 1):
        for combo in combinations(s, size):
            bases = [_prime_power_base(q) for q in combo]
            if len(set(bases)) < size:
                continue
            if not divides(cyclotomic(math.prod(combo)), p):
                t2, failure = False, combo
                break
        if not t2:
            break
    return CovenMeyerowitzReport(r, s, t1, t2, p(1), prod, failure)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def newman_prime_test(k) -> bool:
    """Tile test for sets of prime size ``p``.

    True iff for some ``e >= 0`` all elements agree mod ``p**e`` and are
    pairwise distinct mod ``p**(e+1)``.
    """
    k = as_zset(k)
    p = len(k)
    if not _is_prime(p):
        raise CardinalityNotPrime(f"|K| = {p} is not prime")
    e = 0
    while True:
        pe = p**e
        if any(x % pe for x in k.elements):
            return False
        if len({x % (pe * p) for x in k.elements}) == p:
            return True
        e += 1


def is_arithmetic_Zn(k, n: int) -> bool:
    """Whether the circulant system of ``k`` over ``Z_n`` is singular.

    Decided by ``gcd(P_K, x**n - 1) != 1``; the factor ``x - 1`` never divides
    a mask polynomial since ``P_K(1) = |K|``.
    """
    k = as_zset(k)
    if n <= len(k):
        raise ModulusTooSmall(f"need n > |K| = {len(k)}, got {n}")
    g = poly_gcd(mask_polynomial(k), IntPoly.monomial(n) - IntPoly([1]))
    return g.degree > 0


def family_parith_nontile(p: int) -> ZSet:
    """The prime-size example: mask is ``Phi_6 * (1 + x + x^p + ... + x^(2p-3))``.

    Elements ``{0, 3, p} | {p+2, ..., 2p-3} | {2p-1}``, ``p`` of them.
    """
    if not (_is_prime(p) and p > 3):
        raise BadParameters(f"p must be a prime > 3, got {p}")
    return ZSet(tuple([0, 3, p] + list(range(p + 2, 2 * p - 2)) + [2 * p - 1]))


def family_parith_nontile_composite(p: int, d: int) -> ZSet:
    """``{0, ..., dp + d - 1}`` minus ``{jp + j - 1 : 1 <= j <= d}``; size ``dp``."""
    if not _is_prime(p) or d < 2:
        raise BadParameters(f"need p prime and d > 1, got p={p}, d={d}")
    removed = {j * p + j - 1 for j in range(1, d + 1)}
    return ZSet(tuple(x for x in range(d * p + d) if x not in removed))
