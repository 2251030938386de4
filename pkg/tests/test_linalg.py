"""Exact linear algebra: RREF, kernels, images, quotients."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgreg.fields import QQ, GF, FieldMismatchError
from dgreg.linalg import (
    ContainmentError,
    Matrix,
    image_basis,
    kernel_basis,
    quotient_by,
    row_reduce,
    span_coordinates,
)


def test_rref_proportional_rows():
    m = Matrix.from_rows(QQ, [[1, 2], [2, 4]])
    red = row_reduce(m)
    assert red.rank == 1
    assert red.pivot_cols == (0,)
    assert red.rref.rows[0] == (Fraction(1), Fraction(2))


def test_rref_identity():
    red = row_reduce(Matrix.identity(QQ, 3))
    assert red.rank == 3
    assert red.pivot_cols == (0, 1, 2)


def test_kernel_over_f2():
    m = Matrix.from_rows(GF(2), [[1, 1]])
    assert row_reduce(m).rank == 1
    assert kernel_basis(m) == [(1, 1)]


def test_image_of_nilpotent():
    m = Matrix.from_rows(QQ, [[0, 1], [0, 0]])
    assert image_basis(m) == [(Fraction(1), Fraction(0))]


def test_kernel_of_zero_map_is_everything():
    m = Matrix.zeros(QQ, 0, 2)
    basis = kernel_basis(m)
    assert len(basis) == 2


def test_quotient_dimension_count():
    span = [(Fraction(1), 0, 0), (0, Fraction(1), 0), (0, 0, Fraction(1))]
    sub = [(Fraction(1), Fraction(1), 0)]
    q = quotient_by(QQ, span, sub)
    assert q.dim == 2
    # projection of a sub vector is zero
    assert all(x == 0 for x in q.project((1, 1, 0)))


def test_quotient_containment_error():
    with pytest.raises(ContainmentError):
        quotient_by(QQ, [(Fraction(1), 0)], [(0, Fraction(1))])


def test_field_mismatch():
    a = Matrix.from_rows(QQ, [[1]])
    b = Matrix.from_rows(GF(5), [[1]])
    with pytest.raises(FieldMismatchError):
        a.mul(b)


def test_span_coordinates_exact():
    span = [(Fraction(1), Fraction(2)), (Fraction(0), Fraction(1))]
    coords = span_coordinates(QQ, span, (Fraction(3), Fraction(7)))
    assert coords == (Fraction(3), Fraction(1))
    assert span_coordinates(QQ, [(Fraction(1), Fraction(0))], (0, 1)) is None


small_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, field):
    nrows = draw(st.integers(min_value=1, max_value=5))
    ncols = draw(st.integers(min_value=1, max_value=5))
    rows = [[draw(small_entries) for _ in range(ncols)] for _ in range(nrows)]
    return Matrix.from_rows(field, rows)


@settings(max_examples=60, deadline=None)
@given(matrices(QQ))
def test_rank_nullity_q(m):
    assert row_reduce(m).rank + len(kernel_basis(m)) == m.ncols


@settings(max_examples=60, deadline=None)
@given(matrices(GF(7)))
def test_rank_nullity_f7(m):
    assert row_reduce(m).rank + len(kernel_basis(m)) == m.ncols


@settings(max_examples=40, deadline=None)
@given(matrices(QQ))
def test_rref_idempotent(m):
    once = row_reduce(m).rref
    again = row_reduce(once).rref
    assert once.rows == again.rows


@settings(max_examples=40, deadline=None)
@given(matrices(GF(3)))
def test_kernel_vectors_are_killed(m):
    for v in kernel_basis(m):
        assert all(m.field.is_zero(x) for x in m.apply(v))
