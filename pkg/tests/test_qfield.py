"""Exact linear algebra: canonical forms, kernels, subspace lattice."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadrivol.qfield import (RatMatrix, Rational, Subspace, intersect,
                              inverse, kernel, rank, rat, rational_square_root,
                              rref, subspace_sum)


def M(rows):
    return RatMatrix.from_rows(rows)


def test_rational_invariants():
    x = Rational(6, -4)
    assert (x.numerator, x.denominator) == (-3, 2)
    assert Rational(0, 7) == Rational(0, 1)
    assert rat("3/2") == Fraction(3, 2)


def test_rref_identity():
    assert rref(RatMatrix.identity(2)) == RatMatrix.identity(2)


def test_rref_rank_one():
    assert rref(M([[2, 4], [1, 2]])) == M([[1, 2], [0, 0]])


def test_rref_permutation():
    assert rref(M([[0, 1], [1, 0]])) == RatMatrix.identity(2)


def test_rref_idempotent_simple():
    a = M([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert rref(rref(a)) == rref(a)


def test_kernel_zero_map():
    k = kernel(RatMatrix.zero(2, 3))
    assert k.dim == 3 and k == Subspace.full(3)


def test_kernel_injective():
    assert kernel(RatMatrix.identity(2)).dim == 0


def test_kernel_single_equation():
    k = kernel(M([[1, 1, 0]]))
    assert k.dim == 2
    assert k.contains_vector([1, -1, 0])


def test_intersect_idempotent():
    a = Subspace.from_rows(3, [[1, 0, 0], [0, 1, 0]])
    assert intersect(a, a) == a


def test_intersect_complementary():
    a = Subspace.from_rows(4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    b = Subspace.from_rows(4, [[0, 0, 1, 0], [0, 0, 0, 1]])
    assert intersect(a, b).dim == 0


def test_intersect_coordinate_spans():
    a = Subspace.from_rows(3, [[1, 0, 0], [0, 1, 0]])
    b = Subspace.from_rows(3, [[0, 1, 0], [0, 0, 1]])
    assert intersect(a, b) == Subspace.from_rows(3, [[0, 1, 0]])


def test_sum_neutral_and_idempotent():
    a = Subspace.from_rows(3, [[1, 2, 3]])
    assert subspace_sum(a, Subspace.zero(3)) == a
    assert subspace_sum(a, a) == a


def test_sum_complementary_lines():
    a = Subspace.from_rows(2, [[1, 1]])
    b = Subspace.from_rows(2, [[1, -1]])
    assert subspace_sum(a, b) == Subspace.full(2)


def test_inverse_round_trip():
    a = M([[1, 2], [3, 5]])
    assert a.mul(inverse(a)) == RatMatrix.identity(2)
    with pytest.raises(ValueError):
        inverse(M([[1, 2], [2, 4]]))


def test_rational_square_root():
    assert rational_square_root(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_square_root(Fraction(2)) is None
    assert rational_square_root(Fraction(-1)) is None


small_entries = st.integers(min_value=-9, max_value=9)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(min_value=1, max_value=max_dim))
    c = draw(st.integers(min_value=1, max_value=max_dim))
    rows = draw(st.lists(
        st.lists(small_entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return RatMatrix.from_rows(rows)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel(m).dim == m.cols


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rref_idempotent_and_rank_preserving(m):
    r = rref(m)
    assert rref(r) == r
    assert rank(r) == rank(m)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilate(m):
    k = kernel(m)
    for v in k.basis_vectors():
        assert all(x == 0 for x in m.times_vector(v))


@settings(max_examples=60, deadline=None)
@given(matrices(max_dim=5), matrices(max_dim=5))
def test_modular_dimension_law(ma, mb):
    n = max(ma.cols, mb.cols)
    a = Subspace.from_rows(n, [list(r) + [0] * (n - ma.cols)
                               for r in ma.iter_rows()])
    b = Subspace.from_rows(n, [list(r) + [0] * (n - mb.cols)
                               for r in mb.iter_rows()])
    assert a.dim + b.dim == subspace_sum(a, b).dim + intersect(a, b).dim


@settings(max_examples=60, deadline=None)
@given(matrices(max_dim=5))
def test_subspace_canonical_equality(m):
    rows = m.to_lists()
    a = Subspace.from_rows(m.cols, rows)
    b = Subspace.from_rows(m.cols, list(reversed(rows)) + rows)
    assert a == b
    assert a.basis == b.basis
