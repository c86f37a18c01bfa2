from fractions import Fraction

import pytest
from sympy import Matrix, Rational

from dmodpipe.core.errors import InvalidQuiverData
from dmodpipe.quiver import DiskQuad, MonodromyPair, QuadMorphism


def test_pair_from_strings():
    pair = MonodromyPair([["1/2", 1], [0, Fraction(3, 2)]])
    assert pair.dim == 2
    assert pair.rho[0, 0] == Rational(1, 2)


@pytest.mark.parametrize('rho', [
    [[1, 2]],
    [[1, 1], [1, 1]],
    [[0]],
])
def test_invalid_pairs(rho):
    with pytest.raises(InvalidQuiverData):
        MonodromyPair(rho)


def test_float_entries_refused():
    with pytest.raises(TypeError):
        MonodromyPair([[0.5]])


def test_quad_dimensions():
    quad = DiskQuad([[1, 0]], [[0], [1]])
    assert quad.dims == (2, 1)
    empty = DiskQuad([], [], dim_v=3, dim_vp=0)
    assert empty.dims == (3, 0)


def test_invalid_quads():
    with pytest.raises(InvalidQuiverData):
        DiskQuad([[1, 0]], [[1, 0]])
    # id + can·var = 0
    with pytest.raises(InvalidQuiverData):
        DiskQuad([[1]], [[-1]])


def test_morphism_validation():
    quad = DiskQuad([[1]], [[1]])
    identity = QuadMorphism([[1]], [[1]])
    assert identity.is_morphism(quad, quad)
    assert identity.validate(quad, quad) is identity
    broken = QuadMorphism([[1]], [[2]])
    assert not broken.is_morphism(quad, quad)
    with pytest.raises(InvalidQuiverData):
        broken.validate(quad, quad)
    wrong_shape = QuadMorphism(Matrix([[1, 0]]), [[1]])
    assert not wrong_shape.is_morphism(quad, quad)
