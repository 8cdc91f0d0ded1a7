from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nga.exactlin import (
    IncrementalBasis,
    RatMatrix,
    as_fraction,
    det,
    in_span,
    inverse,
    is_invertible,
    kernel_basis,
    normalize,
    nullity,
    rank,
    rat,
    rref,
    solve,
    span_coordinates,
)

small = st.integers(min_value=-4, max_value=4)


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(small) for _ in range(c)] for _ in range(r)]


@st.composite
def rat_matrices(draw, max_n=4):
    r = draw(st.integers(1, max_n))
    c = draw(st.integers(1, max_n))
    ent = st.builds(Fraction, small, st.integers(1, 3))
    return [[draw(ent) for _ in range(c)] for _ in range(r)]


def sym(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                          for x in r] for r in rows])


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_rat_reduces():
    assert rat(2, 4) == Fraction(1, 2)
    assert rat(-3, -6) == Fraction(1, 2)


@settings(max_examples=150, deadline=None)
@given(rat_matrices())
def test_rank_matches_sympy(rows):
    assert rank(rows) == sym(rows).rank()


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_kernel_is_kernel_and_complete(rows):
    ncols = len(rows[0])
    K = kernel_basis(rows, ncols=ncols)
    assert len(K) == ncols - sym(rows).rank()
    for v in K:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
        assert v == normalize(v)
    if K:
        assert rank(K) == len(K)


@settings(max_examples=100, deadline=None)
@given(rat_matrices())
def test_rref_matches_sympy(rows):
    R, piv = rref(rows)
    S, spiv = sym(rows).rref()
    assert list(piv) == list(spiv)
    mine = [[sympy.Rational(x.numerator, x.denominator) for x in R.row(i)] for i in range(R.rows)]
    assert sympy.Matrix(mine) == S


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_and_inverse(rows):
    M = RatMatrix.from_rows(rows)
    d = det(M)
    assert d == sym(rows).det()
    assert is_invertible(M) == (d != 0)
    if d:
        assert M @ inverse(M) == RatMatrix.identity(M.rows)
    else:
        with pytest.raises(ZeroDivisionError):
            inverse(M)


def test_known_small_cases():
    assert rank([[1, 2], [2, 4]]) == 1
    assert nullity([[1, 2], [2, 4]]) == 1
    assert kernel_basis([[1, 1, 0], [0, 1, 1]], ncols=3) == [(Fraction(1), Fraction(-1), Fraction(1))]
    assert kernel_basis([], ncols=2) == [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]


def test_solve_and_span():
    M = RatMatrix.from_rows([[1, 1], [1, -1]])
    assert solve(M, [2, 0]) == (Fraction(1), Fraction(1))
    assert solve(RatMatrix.from_rows([[1, 1], [1, 1]]), [1, 2]) is None
    assert in_span([[1, 0, 1], [0, 1, 1]], [1, 1, 2])
    assert not in_span([[1, 0, 1]], [0, 1, 0])
    assert span_coordinates([[1, 0, 1], [0, 1, 1]], [2, 3, 5]) == (Fraction(2), Fraction(3))


def test_matrix_shapes():
    A = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert A.shape == (2, 3)
    assert A.T.shape == (3, 2)
    assert A.col(1) == (Fraction(2), Fraction(5))
    with pytest.raises(ValueError):
        RatMatrix(2, 2, [1, 2, 3])
    with pytest.raises(AttributeError):
        A.rows = 3


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=7))
def test_incremental_basis_dependences(vectors):
    b = IncrementalBasis(4)
    for i, v in enumerate(vectors):
        dep = b.add(v)
        if dep is None:
            continue
        members = vectors[:i + 1]
        assert dep[-1] != 0
        for j in range(4):
            assert sum(c * m[j] for c, m in zip(dep, members)) == 0
    assert b.rank == rank(vectors)
