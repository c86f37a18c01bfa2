import pytest
from sympy import Matrix

from dmodpipe.formal import clebsch_gordan, jordan_block_sizes, tensor_block_sizes


def test_u2_tensor_u2():
    assert clebsch_gordan(2, 2) == [3, 1]


@pytest.mark.parametrize('a', range(1, 6))
@pytest.mark.parametrize('b', range(1, 6))
def test_clebsch_gordan_against_jordan_form(a, b):
    assert clebsch_gordan(a, b) == tensor_block_sizes(a, b)


def test_jordan_block_sizes():
    nilpotent = Matrix([
        [0, 1, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ])
    assert jordan_block_sizes(nilpotent) == [2, 2]
    assert jordan_block_sizes(Matrix.zeros(3, 3)) == [1, 1, 1]
