from fractions import Fraction

import pytest
from sympy import Matrix, Rational, eye, zeros

from dmodpipe.utils import (as_matrix, column_basis, coordinates, inverse,
                            is_invertible, is_similar, matrix_entries,
                            nullspace, rank, rref)


def test_as_matrix():
    m = as_matrix([["1/3", 2], [Fraction(-1, 2), 0]])
    assert m[0, 0] == Rational(1, 3)
    assert matrix_entries(m) == [[Fraction(1, 3), 2], [Fraction(-1, 2), 0]]
    assert as_matrix([], shape=(0, 3)).shape == (0, 3)
    with pytest.raises(TypeError):
        as_matrix([[0.1]])


def test_rank_and_kernel():
    m = Matrix([[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    kernel = nullspace(m)
    assert len(kernel) == 2
    assert all(m * v == zeros(2, 1) for v in kernel)
    assert rank(zeros(0, 2)) == 0
    assert len(nullspace(zeros(0, 2))) == 2


def test_rref_pivots():
    reduced, pivots = rref(Matrix([[0, 2, 4], [0, 1, 3]]))
    assert pivots == (1, 2)
    assert reduced == Matrix([[0, 1, 0], [0, 0, 1]])


def test_inverse():
    m = Matrix([[2, 1], [1, 1]])
    assert is_invertible(m)
    assert inverse(m) * m == eye(2)
    assert not is_invertible(Matrix([[1, 2], [2, 4]]))
    assert not is_invertible(Matrix([[1, 2]]))


def test_column_basis_uses_leftmost_pivots():
    m = Matrix([[1, 2, 0], [1, 2, 1]])
    basis, coords = column_basis(m)
    assert basis == Matrix([[1, 0], [1, 1]])
    assert basis * coords == m
    empty_basis, empty_coords = column_basis(zeros(2, 2))
    assert empty_basis.shape == (2, 0)
    assert empty_coords.shape == (0, 2)


def test_coordinates():
    basis = Matrix([[1, 0], [1, 1], [0, 2]])
    vectors = basis * Matrix([[3], [-1]])
    assert coordinates(basis, vectors) == Matrix([[3], [-1]])
    with pytest.raises(ValueError):
        coordinates(basis, Matrix([[1], [0], [0]]))


def test_is_similar():
    a = Matrix([[2, 1], [0, 2]])
    s = Matrix([[1, 2], [3, 7]])
    assert is_similar(a, s * a * inverse(s))
    assert not is_similar(a, 2 * eye(2))
    assert is_similar(zeros(0, 0), zeros(0, 0))
    # irreducible quadratic factor: rotation by 90 degrees
    r = Matrix([[0, -1], [1, 0]])
    assert is_similar(r, Matrix([[0, 1], [-1, 0]]))
    assert not is_similar(r, Matrix([[0, 1], [1, 0]]))
