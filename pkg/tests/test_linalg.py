from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hookrec.linalg import RationalMatrix, normalize_vector, nullspace, rank, shuffled_rank
from hookrec.recurrence import fitting_matrix

from conftest import paper_series


def naive_rank(rows):
    """Textbook Fraction elimination, kept separate from the package routine."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


matrices = st.integers(1, 6).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-4, 4), min_size=cols, max_size=cols), min_size=1, max_size=7)
)


def test_identity_has_trivial_kernel():
    assert nullspace(RationalMatrix.identity(2)) == []
    assert rank(RationalMatrix.identity(4)) == 4


def test_zero_matrix():
    assert rank(RationalMatrix.zeros(3, 3)) == 0
    assert len(nullspace(RationalMatrix.zeros(3, 3))) == 3


def test_rank_one_kernel():
    assert nullspace([[1, 2], [2, 4]]) == [(-2, 1)] or nullspace([[1, 2], [2, 4]]) == [(2, -1)]
    assert normalize_vector([Fraction(1), Fraction(-1, 2)]) == (2, -1)


def test_entries_are_reduced():
    m = RationalMatrix([[Fraction(2, 4), Fraction(-3, -6)]])
    assert m[0, 0] == Fraction(1, 2) and m[0, 0].denominator == 2


def test_rational_entries():
    m = RationalMatrix([[Fraction(1, 3), Fraction(2, 3)], [Fraction(1, 2), 1]])
    (v,) = nullspace(m)
    assert not any(m.apply(v))


@settings(max_examples=200)
@given(matrices)
def test_kernel_properties(rows):
    m = RationalMatrix(rows)
    basis = nullspace(m)
    r = rank(m)
    assert r == naive_rank(rows)
    assert len(basis) == m.cols - r
    for v in basis:
        assert not any(m.apply(v))
        first = next(x for x in v if x)
        assert first > 0


@settings(max_examples=100)
@given(matrices, st.integers(0, 1000))
def test_rank_independent_of_row_order(rows, seed):
    assert shuffled_rank(rows, seed) == rank(rows)


@settings(max_examples=100)
@given(matrices)
def test_pivot_policies_span_same_kernel(rows):
    a = nullspace(rows, pivot="smallest", screen=False)
    b = nullspace(rows, pivot="first", screen=False)
    assert len(a) == len(b)
    if b:
        base = rank(b)
        for v in a:
            assert rank(b + [list(v)]) == base


def test_unknown_pivot_policy():
    with pytest.raises(ValueError):
        nullspace([[1, 2]], pivot="largest", screen=False)


def test_paper_fitting_matrix_kernel():
    seq = paper_series((2, 1, 1), 59)
    rows = fitting_matrix(seq, 3, 2)
    assert (len(rows), len(rows[0])) == (57, 12)
    (v,) = nullspace(rows)
    # coefficient blocks p_0..p_3, lowest degree first
    assert v == (6, 9, 3, 0, -2, -1, -9, -11, -3, 3, 4, 1)
