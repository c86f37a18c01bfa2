from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dmodpipe.core.errors import IntegerResidue
from dmodpipe.exact import (A, B, bipoly, discrete_antiderivative, evaluate,
                            pochhammer_ratio, shift_variable)

non_integral = st.fractions(min_value=-6, max_value=6, max_denominator=9) \
    .filter(lambda x: x.denominator != 1)


@pytest.mark.parametrize('alpha, k, expected', [
    (Fraction(1, 2), 1, Fraction(-2, 3)),
    (Fraction(1, 5), 0, 1),
    (Fraction(1, 3), 2, Fraction(9, 28)),
    (Fraction(1, 2), -1, Fraction(-1, 2)),
    (Fraction(1, 2), -2, Fraction(-1, 2) * Fraction(1, 2)),
])
def test_pochhammer_ratio(alpha, k, expected):
    assert pochhammer_ratio(alpha, k) == expected


def test_pochhammer_integer_residue():
    with pytest.raises(IntegerResidue):
        pochhammer_ratio(Fraction(2), 1)


@given(non_integral, st.integers(-8, 8))
def test_pochhammer_recurrence(alpha, k):
    assert pochhammer_ratio(alpha, k + 1) == \
        pochhammer_ratio(alpha, k) / (-alpha - k - 1)


@pytest.mark.parametrize('p, expected', [
    (bipoly({(0, 0): 1}), A),
    (A, A * (A + 1) / 2),
    (3 * A**2 - 3 * A + 1, A**3),
    (B * A, B * A * (A + 1) / 2),
])
def test_discrete_antiderivative_examples(p, expected):
    assert discrete_antiderivative(p) == expected


def test_antiderivative_in_b():
    q = discrete_antiderivative(A * B, variable=B)
    assert q - shift_variable(q, B, -1) == A * B


@st.composite
def bipolys(draw, max_degree=6):
    monomials = [(i, j) for i in range(max_degree + 1)
                 for j in range(max_degree + 1 - i)]
    terms = draw(st.dictionaries(
        st.sampled_from(monomials),
        st.fractions(min_value=-4, max_value=4, max_denominator=5),
        max_size=6))
    return bipoly(terms)


@settings(max_examples=50, deadline=None)
@given(bipolys())
def test_antiderivative_difference_identity(p):
    q = discrete_antiderivative(p)
    assert q - shift_variable(q, A, -1) - p == 0
    assert evaluate(q, 0, Fraction(3, 7)) == 0
