from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from arithsets.errors import ZeroVector
from arithsets.exactlin import RatMatrix, circulant_from_set, clear_denominators, kernel_basis, rank

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_circulant_definition():
    m = circulant_from_set([0, 1], 3)
    assert [list(map(int, row)) for row in m.entries] == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    m6 = circulant_from_set([0, 1, 2], 6)
    assert all(sum(row) == 3 for row in m6.entries)


def test_kernel_examples():
    assert kernel_basis(RatMatrix.identity(3)) == []
    assert len(kernel_basis(RatMatrix.zeros(2, 2))) == 2
    m = circulant_from_set([0, 1, 2], 6)
    assert rank(m) == 4
    assert len(kernel_basis(m)) == 2


def test_clear_denominators_examples():
    assert clear_denominators([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert clear_denominators([1, 1, -2]) == [1, 1, -2]
    # first nonzero entry is made positive
    assert clear_denominators([Fraction(-2, 4), Fraction(1, 4)]) == [2, -1]
    with pytest.raises(ZeroVector):
        clear_denominators([0, 0])


def test_collisions_need_flag():
    with pytest.raises(ValueError):
        circulant_from_set([0, 3, 5, 7, 9], 6)
    m = circulant_from_set([0, 3, 5, 7, 9], 6, allow_collisions=True)
    assert sum(m.entries[0]) == 5


@given(matrices)
@settings(max_examples=150)
def test_rank_matches_sympy(rows):
    m = RatMatrix(rows)
    assert rank(m) == sympy.Matrix(rows).rank()


@given(matrices)
@settings(max_examples=150)
def test_kernel_vectors_are_kernel(rows):
    m = RatMatrix(rows)
    basis = kernel_basis(m)
    assert len(basis) + rank(m) == m.cols
    for v in basis:
        assert all(x == 0 for x in m.matvec(v))
        w = clear_denominators(v)
        assert all(x == 0 for x in m.matvec(w))


@given(st.lists(st.fractions(max_denominator=30).filter(lambda f: abs(f) < 50), min_size=1, max_size=6))
def test_clear_denominators_primitive(v):
    if all(x == 0 for x in v):
        return
    w = clear_denominators(v)
    import math

    assert math.gcd(*w) == 1
    first = next(x for x in w if x)
    assert first > 0
    # w is a rational multiple of v
    i = next(j for j, x in enumerate(v) if x)
    ratio = Fraction(w[i]) / v[i]
    assert [ratio * x for x in v] == [Fraction(x) for x in w]
