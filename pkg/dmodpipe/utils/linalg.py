"""
Exact linear algebra over Q on sympy matrices.

Dense `sympy.Matrix` objects carry the data; the heavy steps (rank, row
reduction, kernels) go through `DomainMatrix` over ``QQ``, which avoids
the symbolic overhead of the generic Matrix routines.
"""
from fractions import Fraction

from sympy import Matrix, Poly, Rational, Symbol, eye, factor_list, zeros
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

__all__ = [
    'as_matrix',
    'matrix_entries',
    'to_domain',
    'rank',
    'rref',
    'nullspace',
    'is_invertible',
    'inverse',
    'column_basis',
    'coordinates',
    'matrix_polynomial',
    'is_similar',
]


def _to_sympy(value):
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        return Rational(value.strip())
    if isinstance(value, float):
        raise TypeError("refusing inexact matrix entry {!r}".format(value))
    return Rational(value)


def as_matrix(rows, shape=None):
    """
    build a rational sympy Matrix from nested lists of ints, Fractions or
    "p/q" strings. `shape` is needed for matrices with a zero dimension.
    """
    if isinstance(rows, Matrix):
        return rows
    if shape is not None and (shape[0] == 0 or shape[1] == 0):
        return zeros(*shape)
    return Matrix([[_to_sympy(v) for v in row] for row in rows])


def matrix_entries(m):
    """ nested lists of Fractions, row-major """
    return [[Fraction(int(v.p), int(v.q)) for v in m.row(i)]
            for i in range(m.rows)]


def to_domain(m):
    return DomainMatrix.from_Matrix(m).convert_to(QQ)


def rank(m):
    if m.rows == 0 or m.cols == 0:
        return 0
    return to_domain(m).rank()


def rref(m):
    """ reduced row echelon form and pivot columns """
    if m.rows == 0 or m.cols == 0:
        return m, ()
    reduced, pivots = to_domain(m).rref()
    return reduced.to_Matrix(), tuple(pivots)


def nullspace(m):
    """ list of column vectors spanning the kernel of `m` """
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [eye(m.cols)[:, i] for i in range(m.cols)]
    kernel = to_domain(m).nullspace().to_Matrix()
    return [kernel.row(i).T for i in range(kernel.rows)]


def is_invertible(m):
    if m.rows != m.cols:
        return False
    return rank(m) == m.rows


def inverse(m):
    if m.rows == 0:
        return m
    return to_domain(m).inv().to_Matrix()


def column_basis(m):
    """
    Basis of the column space taken from the leftmost pivot columns.

    Returns
    -------
    basis: Matrix
        the pivot columns of `m` (``m.rows`` x rank)
    coords: Matrix
        coordinates of every column of `m` in that basis (rank x ``m.cols``),
        so that ``basis * coords == m``
    """
    reduced, pivots = rref(m)
    k = len(pivots)
    if k == 0:
        return zeros(m.rows, 0), zeros(0, m.cols)
    basis = Matrix.hstack(*[m[:, j] for j in pivots])
    return basis, reduced[:k, :]


def coordinates(basis, vectors):
    """
    C with ``basis * C == vectors`` for a basis of full column rank whose
    span contains the columns of `vectors`
    """
    k = basis.cols
    if k == 0:
        return zeros(0, vectors.cols)
    gram = basis.T * basis
    coords = inverse(gram) * basis.T * vectors
    if basis * coords != vectors:
        raise ValueError("vectors are not in the span of the basis")
    return coords


def matrix_polynomial(m, poly):
    """ p(m) for a univariate sympy Poly, by Horner's rule """
    result = zeros(m.rows, m.cols)
    identity = eye(m.rows)
    for c in poly.all_coeffs():
        result = result * m + identity * c
    return result


def is_similar(a, b):
    """
    Decide conjugacy over Q: equal characteristic polynomials, and equal
    ranks of p(a)^k, p(b)^k for every irreducible factor p and every k up
    to its multiplicity.
    """
    if a.shape != b.shape:
        return False
    n = a.rows
    if n == 0:
        return True
    x = Symbol('x')
    char_a = a.charpoly(x)
    if char_a.all_coeffs() != b.charpoly(x).all_coeffs():
        return False
    _, factors = factor_list(char_a.as_expr(), x)
    for factor, multiplicity in factors:
        poly = Poly(factor, x)
        pa = matrix_polynomial(a, poly)
        pb = matrix_polynomial(b, poly)
        power_a = eye(n)
        power_b = eye(n)
        for _ in range(multiplicity):
            power_a = power_a * pa
            power_b = power_b * pb
            if rank(power_a) != rank(power_b):
                return False
    return True
