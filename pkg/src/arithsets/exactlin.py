"""Exact rational linear algebra for circulant systems.

Only what the periodic-solution machinery needs: building the circulant
matrix of a set over ``Z_n``, an exact kernel basis and clearing
denominators of a rational vector.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadModulus, ZeroVector

__all__ = [
    "RatMatrix",
    "circulant_from_set",
    "rank",
    "kernel_basis",
    "clear_denominators",
]


class RatMatrix:
    """Rectangular matrix of :class:`fractions.Fraction` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if cols is None:
            if not data:
                raise ValueError("empty matrix needs an explicit column count")
            cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self.entries = data

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def matvec(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"

    def to_json(self) -> list[list[dict]]:
        from .jsonio import rational

        return [[rational(x) for x in row] for row in self.entries]


def circulant_from_set(elements: Iterable[int], n: int, *, allow_collisions: bool = False) -> RatMatrix:
    """Matrix of the system ``sum_i x[(g + s_i) mod n] = 0``, one row per ``g``.

    With ``allow_collisions`` elements that coincide mod ``n`` add up, which
    is the matrix of period-``n`` solutions over the integers; otherwise a
    collision raises :class:`BadModulus`.
    """
    if n < 1:
        raise BadModulus("modulus must be positive")
    residues = [s % n for s in elements]
    if not allow_collisions and len(set(residues)) != len(residues):
        raise BadModulus(f"elements collide modulo {n}")
    first = [0] * n
    for r in residues:
        first[r] += 1
    return RatMatrix([first[-g:] + first[:-g] if g else list(first) for g in range(n)])


def _echelon(m: RatMatrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) row echelon form of ``m`` scaled to integers.

    Returns the integer echelon rows (only the nonzero ones) and the pivot
    column of each.
    """
    rows = []
    for row in m.entries:
        den = math.lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * den) for x in row])
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(m.cols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            a = rows[i][c]
            rows[i] = [(p * x - a * y) // prev for x, y in zip(rows[i], rows[r])]
        prev = p
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m: RatMatrix) -> int:
    return len(_echelon(m)[1])


def kernel_basis(m: RatMatrix) -> list[list[Fraction]]:
    """Exact basis of the right kernel, one vector per free column.

    Each vector has a 1 in its own free column and 0 in the other free
    columns (the reduced echelon basis).
    """
    ech, pivots = _echelon(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, pc in zip(reversed(ech), reversed(pivots)):
            s = sum((row[c] * v[c] for c in range(pc + 1, m.cols)), Fraction(0))
            v[pc] = -s / row[pc]
        basis.append(v)
    return basis


def clear_denominators(v: Sequence) -> list[int]:
    """Primitive integer vector parallel to ``v`` with first nonzero entry positive."""
    fr = [Fraction(x) for x in v]
    if not any(fr):
        raise ZeroVector("cannot normalize the zero vector")
    den = math.lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return ints
