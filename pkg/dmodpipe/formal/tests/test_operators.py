from collections import Counter
from fractions import Fraction

import pytest

from dmodpipe.core.errors import InsufficientPrecision
from dmodpipe.exact import TruncatedPuiseuxSeries
from dmodpipe.formal import (DifferentialOperator, determinant_exponent,
                             exponential, kummer, newton_polygon,
                             newton_slopes, twist_operator)

S = TruncatedPuiseuxSeries
half = Fraction(1, 2)


def euler_operator(alpha):
    """ z∂ - alpha """
    return DifferentialOperator([-alpha, {1: 1}])


def test_euler_operator_is_regular():
    slopes, irr = newton_slopes(euler_operator(half))
    assert slopes == Counter({0: 1})
    assert irr == 0


def test_exponential_operator_slope_one():
    slopes, irr = newton_slopes(DifferentialOperator([{-2: -3}, 1]))
    assert slopes == Counter({1: 1})
    assert irr == 1


def test_second_order_half_slope():
    slopes, irr = newton_slopes(DifferentialOperator([{-3: -1}, 0, 1]))
    assert slopes == Counter({half: 2})
    assert irr == 1


def test_mixed_polygon():
    # z^-2 + ∂ + z^2∂^2
    op = DifferentialOperator([{-2: 1}, {0: 1}, {2: 1}])
    points, edges = newton_polygon(op)
    assert points == [(0, -2), (1, -1), (2, 0)]
    assert edges == [(Fraction(1), 2)]


def test_zero_slope_multiplicity_is_rightmost_minimum():
    # z^2∂^2 + z∂ + 1 is regular of rank 2
    op = DifferentialOperator([1, {1: 1}, {2: 1}])
    slopes, irr = newton_slopes(op)
    assert slopes == Counter({0: 2})
    assert irr == 0


def test_undetermined_coefficient():
    with pytest.raises(InsufficientPrecision):
        newton_slopes(DifferentialOperator([S({}, trunc=-5), 1]))
    slopes, _ = newton_slopes(DifferentialOperator([S({}, trunc=3), {1: 1}]))
    assert slopes == Counter({0: 1})


def test_zero_operator():
    with pytest.raises(ValueError):
        DifferentialOperator([0, 0])


def test_composition_leibniz():
    z = DifferentialOperator([{1: 1}])
    assert DifferentialOperator.derivation() * z == \
        DifferentialOperator([1, {1: 1}])
    assert DifferentialOperator.derivation().power(2) == \
        DifferentialOperator([0, 0, 1])


def test_twist_operator():
    twisted = twist_operator(euler_operator(half), Fraction(1, 3))
    assert twisted == euler_operator(half + Fraction(1, 3))


SPARSE_OPERATORS = [
    DifferentialOperator([{-3: -1}, 0, 1]),
    DifferentialOperator([{-4: -1}, {-2: 1}, 0, 1]),
]


@pytest.mark.parametrize('op', SPARSE_OPERATORS)
def test_twist_operator_with_vanishing_coefficients(op):
    lam = Fraction(1, 3)
    twisted = twist_operator(op, lam)
    assert twisted.order == op.order
    assert twisted.leading == op.leading
    # the subleading coefficient picks up -order·λ/t
    assert twisted.coefficients[-2] == \
        op.coefficients[-2] + S({-1: -op.order * lam})
    assert twist_operator(twisted, -lam) == op


@pytest.mark.parametrize('op', SPARSE_OPERATORS)
def test_determinant_of_sparse_twist(op):
    lam = Fraction(1, 5)
    assert determinant_exponent(op) == kummer(0)
    assert determinant_exponent(twist_operator(op, lam)) == \
        kummer(op.order * lam)


@pytest.mark.parametrize('op, expected', [
    (euler_operator(half), kummer(half)),
    (euler_operator(Fraction(-1, 3)), kummer(Fraction(2, 3))),
    (DifferentialOperator([{-2: -3}, 1]), exponential({-2: 3})),
    (DifferentialOperator([{-3: -1}, 0, 1]), kummer(0)),
])
def test_determinant_exponent(op, expected):
    assert determinant_exponent(op) == expected


def test_determinant_of_twist_shifts_by_order():
    lam = Fraction(1, 5)
    op = DifferentialOperator([{-3: -1}, {-1: 2}, 1])
    shifted = determinant_exponent(twist_operator(op, lam))
    assert shifted == determinant_exponent(op).tensor_kummer(2 * lam)
