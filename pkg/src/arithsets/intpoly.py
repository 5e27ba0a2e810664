"""Exact arithmetic on polynomials with integer coefficients.

Polynomials are stored densely in ascending degree order and are never
mutated after construction. Besides ring arithmetic this module provides
exact division, primitive gcd via the subresultant remainder sequence,
cyclotomic polynomials, Sturm-sequence real root counting and an exact count
of the distinct roots lying on the complex unit circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Sequence

import numpy as np

from .errors import NonConvergence, NotDivisible, NotSquarefree

__all__ = [
    "IntPoly",
    "RootCluster",
    "poly_arith",
    "poly_divexact",
    "poly_gcd",
    "reciprocal",
    "squarefree_part",
    "squarefree_decomposition",
    "euler_phi",
    "cyclotomic",
    "cyclotomic_divisors",
    "sturm_sequence",
    "sturm_count",
    "trace_polynomial",
    "count_unit_circle_roots",
    "numeric_roots",
]


class IntPoly:
    """Dense polynomial over the integers, ascending coefficient order.

    ``IntPoly([1, 1, 0, 1])`` is ``1 + x + x**3``. Trailing zero coefficients
    are stripped, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> IntPoly:
        exps = list(exponents)
        if not exps:
            return cls()
        cs = [0] * (max(exps) + 1)
        for e in exps:
            cs[e] += 1
        return cls(cs)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> IntPoly:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(x // c for x in self.coeffs)

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __add__(self, other: IntPoly) -> IntPoly:
        other = _coerce(other)
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_neg(self) -> IntPoly:
        """Return ``P(-x)``."""
        return IntPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> IntPoly:
        return cls(data)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mon and abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}{'*' if mon else ''}{mon}"
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly([p])
    return NotImplemented


X = IntPoly([0, 1])
ONE = IntPoly([1])


def poly_arith(p: IntPoly, q: IntPoly, op: str) -> IntPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def poly_divexact(p: IntPoly, d: IntPoly) -> IntPoly:
    """Return ``q`` with ``p == d * q`` over the integers.

    Raises :class:`NotDivisible` if no such integer polynomial exists.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return IntPoly()
    rem = list(p.coeffs)
    dc = d.coeffs
    dd = len(dc) - 1
    lc = dc[-1]
    if len(rem) - 1 < dd:
        raise NotDivisible(f"{p} is not divisible by {d}")
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        top = rem[k]
        if top == 0:
            continue
        q, r = divmod(top, lc)
        if r:
            raise NotDivisible(f"{p} is not divisible by {d}")
        quot[k - dd] = q
        for j, c in enumerate(dc):
            rem[k - dd + j] -= q * c
    if any(rem[:dd]):
        raise NotDivisible(f"{p} is not divisible by {d}")
    return IntPoly(quot)


def divides(d: IntPoly, p: IntPoly) -> bool:
    try:
        poly_divexact(p, d)
    except NotDivisible:
        return False
    return True


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """``lc(b)**(deg a - deg b + 1) * a mod b``, computed without fractions."""
    db = b.degree
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    rem = list(a.coeffs)
    if len(rem) - 1 < db:
        return a
    lc = b.lc
    bc = b.coeffs
    for k in range(len(rem) - 1, db - 1, -1):
        top = rem[k]
        rem = [c * lc for c in rem]
        if top:
            for j, c in enumerate(bc):
                rem[k - db + j] -= top * c
        rem.pop()
    return IntPoly(rem)


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd over the rationals, positive leading coefficient.

    Uses the subresultant remainder sequence, so all intermediate values stay
    in ``Z[x]`` with controlled coefficient growth.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if q.is_zero():
        return p.primitive_part()
    if p.is_zero():
        return q.primitive_part()
    a, b = p.primitive_part(), q.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    g, h = 1, 1
    while True:
        delta = a.degree - b.degree
        r = pseudo_remainder(a, b)
        if r.is_zero():
            return b.primitive_part()
        if r.degree == 0:
            return ONE
        a = b
        divisor = g * h**delta
        b = IntPoly(c // divisor for c in r.coeffs)
        g = a.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)


def reciprocal(p: IntPoly) -> IntPoly:
    """Coefficient reversal ``x**deg(p) * p(1/x)``."""
    if p.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    return IntPoly(reversed(p.coeffs))


def squarefree_part(p: IntPoly) -> IntPoly:
    """Primitive polynomial with the same distinct complex roots as ``p``."""
    if p.degree <= 0:
        return ONE if not p.is_zero() else p
    g = poly_gcd(p, p.derivative())
    return poly_divexact(p.primitive_part(), g)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: ``pp(p) = prod f_i ** i`` with squarefree coprime ``f_i``.

    Only factors of positive degree are returned, as ``(f_i, i)`` pairs.
    """
    if p.degree <= 0:
        return []
    f = p.primitive_part()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = poly_divexact(f, a)
    c = poly_divexact(df, a) if not df.is_zero() else IntPoly()
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if not d.is_zero() else b.primitive_part()
        if a.degree > 0:
            out.append((a, i))
        b_next = poly_divexact(b, a)
        c = poly_divexact(d, a) if not d.is_zero() else IntPoly()
        b = b_next
        d = c - b.derivative()
        i += 1
    return out


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("phi is defined for m >= 1")
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by dividing out all proper-divisor factors of x^m - 1."""
    if m < 1:
        raise ValueError("cyclotomic polynomials are indexed by m >= 1")
    p = IntPoly.monomial(m) - ONE
    for d in range(1, m):
        if m % d == 0:
            p = poly_divexact(p, cyclotomic(d))
    return p


def cyclotomic_divisors(p: IntPoly) -> list[int]:
    """All ``m`` with ``cyclotomic(m) | p``, ascending.

    ``phi(m) >= sqrt(m / 2)`` bounds the scan by ``m <= 2 * deg(p)**2``;
    candidates are prefiltered by ``phi(m) <= deg(p)``.
    """
    if p.is_zero():
        raise ValueError("every cyclotomic polynomial divides zero")
    deg = p.degree
    if deg < 1:
        return []
    found = []
    for m in range(1, 2 * deg * deg + 1):
        if euler_phi(m) <= deg and divides(cyclotomic(m), p):
            found.append(m)
    return found


def _sign_at(p: IntPoly, x: Fraction) -> int:
    """Sign of ``p(x)`` at a rational point, using integer arithmetic only."""
    num, den = x.numerator, x.denominator
    n = len(p.coeffs) - 1
    acc = 0
    for i, c in enumerate(p.coeffs):
        acc += c * num**i * den ** (n - i)
    return (acc > 0) - (acc < 0)


def sturm_sequence(h: IntPoly) -> list[IntPoly]:
    """Sturm chain of ``h`` with each remainder reduced to its primitive part.

    Signs are tracked so the chain is positive-scalar equivalent to the
    classical ``-rem`` sequence.
    """
    seq = [h, h.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        r = pseudo_remainder(a, b)
        if r.is_zero():
            break
        scale_sign = 1 if (b.lc > 0 or (a.degree - b.degree + 1) % 2 == 0) else -1
        r = r * (-scale_sign)
        c = r.content()
        seq.append(IntPoly(x // c for x in r.coeffs))
    return seq


def _variations(seq: Sequence[IntPoly], x: Fraction) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _strip_rational_root(h: IntPoly, x: Fraction) -> IntPoly:
    """Divide out every factor ``(den*t - num)`` of ``h``."""
    lin = IntPoly([-x.numerator, x.denominator])
    while not h.is_zero() and _sign_at(h, x) == 0:
        h = poly_divexact(h.primitive_part(), lin)
    return h


def sturm_count(h: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of ``h`` in the half-open interval ``(lo, hi]``.

    Raises :class:`NotSquarefree` when ``h`` has a repeated root inside the
    interval.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if h.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    if h.degree == 0:
        return 0
    g = poly_gcd(h, h.derivative())
    if g.degree > 0:
        if sturm_count(squarefree_part(g), lo, hi) > 0:
            raise NotSquarefree(f"{h} has a repeated root in ({lo}, {hi}]")
        h = poly_divexact(h.primitive_part(), g)
    at_hi = 1 if _sign_at(h, hi) == 0 else 0
    h = _strip_rational_root(_strip_rational_root(h, lo), hi)
    if h.degree <= 0:
        return at_hi
    seq = sturm_sequence(h)
    return _variations(seq, lo) - _variations(seq, hi) + at_hi


def trace_polynomial(f: IntPoly) -> IntPoly:
    """For self-reciprocal ``f`` of degree ``2m`` return ``H`` with ``f(x) = x**m * H(x + 1/x)``."""
    if f.degree % 2 or f.coeffs != tuple(reversed(f.coeffs)):
        raise ValueError("trace polynomial needs a self-reciprocal even-degree input")
    m = f.degree // 2
    # Dickson-type recurrence: x^j + x^-j = t*D_{j-1} - D_{j-2}
    d_prev, d_cur = IntPoly([2]), IntPoly([0, 1])
    h = IntPoly([f.coeffs[m]])
    for j in range(1, m + 1):
        if j > 1:
            d_prev, d_cur = d_cur, X * d_cur - d_prev
        h = h + d_cur * f.coeffs[m + j]
    return h


def count_unit_circle_roots(p: IntPoly) -> int:
    """Exact number of distinct complex roots of ``p`` with ``|z| = 1``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root count")
    cs = list(p.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
    p = IntPoly(cs)
    if p.degree <= 0:
        return 0
    g = squarefree_part(poly_gcd(p, reciprocal(p)))
    count = 0
    for lin in (IntPoly([-1, 1]), IntPoly([1, 1])):
        if divides(lin, g):
            g = poly_divexact(g, lin)
            count += 1
    if g.degree <= 0:
        return count
    if g.coeffs != tuple(reversed(g.coeffs)):
        g = -g
    h = trace_polynomial(g)
    return count + 2 * sturm_count(h, -2, 2)


@dataclass(frozen=True)
class RootCluster:
    value: complex
    multiplicity: int

    @property
    def modulus(self) -> float:
        return abs(self.value)


_EPS = np.finfo(float).eps


def _polish(coeffs: Sequence[int], z: complex, tol: float, max_iter: int) -> complex:
    """Newton refinement of one simple root; stops at step size ``tol`` or rounding level."""
    fc = [float(c) for c in coeffs]
    dc = [i * c for i, c in enumerate(fc)][1:]
    for _ in range(max_iter):
        val, bound = 0j, 0.0
        az = abs(z)
        for c in reversed(fc):
            val = val * z + c
            bound = bound * az + abs(c)
        if abs(val) <= 8 * _EPS * bound:
            return z
        dval = 0j
        for c in reversed(dc):
            dval = dval * z + c
        if dval == 0:
            break
        step = val / dval
        z -= step
        if abs(step) <= tol * max(1.0, abs(z)):
            return z
    raise NonConvergence(f"Newton refinement did not reach tol={tol} within {max_iter} steps")


def numeric_roots(p: IntPoly, tol: float = 1e-12, max_iter: int = 100) -> list[RootCluster]:
    """All complex roots of ``p`` with multiplicities.

    Each squarefree factor from :func:`squarefree_decomposition` is solved by
    companion-matrix eigenvalues and then Newton-polished, so repeated roots
    do not degrade accuracy. Roots closer than ``1000 * tol`` are merged.
    Output is sorted by modulus, then argument.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    clusters: list[RootCluster] = []
    for factor, mult in squarefree_decomposition(p):
        approx = np.roots([float(c) for c in reversed(factor.coeffs)])
        for z in approx:
            clusters.append(RootCluster(_polish(factor.coeffs, complex(z), tol, max_iter), mult))
    radius = 1e3 * tol
    merged: list[RootCluster] = []
    for c in clusters:
        for i, m in enumerate(merged):
            if abs(m.value - c.value) <= radius * max(1.0, abs(c.value)):
                merged[i] = RootCluster(m.value, m.multiplicity + c.multiplicity)
                break
        else:
            merged.append(c)
    merged.sort(key=lambda c: (round(abs(c.value), 9), round(np.angle(c.value), 9)))
    return merged
