from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dmodpipe.core.errors import (InvalidRamifiedData, UseBookkeeping,
                                  WrongSlopeSector)
from dmodpipe.formal import FormalModule, exponential, kummer
from dmodpipe.io.containers import TransformBookkeeping
from dmodpipe.transforms import (FourierFlavorFactory, FourierInfinityInfinity,
                                 FourierInfinityZero, FourierZeroInfinity,
                                 fourier_bookkeeping, fourier_local_regular,
                                 fourier_local_regular_inverse,
                                 representative_module, twist_class)

half = Fraction(1, 2)
third = Fraction(1, 3)

residues = st.fractions(0, 1, max_denominator=6)
points = st.fractions(-3, 3, max_denominator=3)


@st.composite
def regular_modules(draw):
    return FormalModule([
        kummer(draw(residues), unip=draw(st.integers(1, 3)))
        for _ in range(draw(st.integers(1, 3)))
    ])


@st.composite
def modules(draw):
    components = []
    for _ in range(draw(st.integers(1, 3))):
        polar = draw(st.dictionaries(st.integers(-4, -2),
                                     st.integers(-3, 3).filter(bool),
                                     max_size=2))
        components.append(exponential(polar, residue=draw(residues),
                                      unip=draw(st.integers(1, 2))))
    return FormalModule(components)


def test_kummer_rule():
    assert fourier_local_regular(FormalModule([kummer(half)])) == \
        FormalModule([kummer(Fraction(3, 2))])
    assert fourier_local_regular(FormalModule([kummer(0)])) == \
        FormalModule([kummer(1)])


def test_kummer_rule_at_finite_point():
    result = fourier_local_regular(FormalModule([kummer(third)]), 2)
    assert result == FormalModule([exponential({-2: 2}, residue=Fraction(4, 3))])


def test_irregular_needs_bookkeeping():
    with pytest.raises(UseBookkeeping):
        fourier_local_regular(FormalModule([exponential({-2: 1})]))
    with pytest.raises(UseBookkeeping):
        fourier_local_regular_inverse(FormalModule([exponential({-3: 1})]))


@given(regular_modules(), points)
def test_regular_inverse(module, x):
    transformed = fourier_local_regular(module, x)
    assert fourier_local_regular_inverse(transformed, x) == module


def test_bookkeeping_exponential():
    bk = fourier_bookkeeping(FormalModule([exponential({-2: 1})]), '0-infty')
    assert bk.rank_out == 2
    assert bk.slopes_out == Counter({half: 2})
    assert bk.irr_out == 1
    assert bk.class_label == 0


def test_bookkeeping_regular():
    bk = fourier_bookkeeping(FormalModule([kummer(third)]), '0-infty', 5)
    assert bk.rank_out == 1
    assert bk.slopes_out == Counter({0: 1})
    assert bk.class_label == 5


def test_bookkeeping_infinity_infinity():
    bk = fourier_bookkeeping(FormalModule([exponential({-3: 1})]), 'infty-infty')
    assert bk.rank_out == 1
    assert bk.slopes_out == Counter({2: 1})
    assert bk.irr_out == 2
    assert bk.class_label == 'infty'


def test_bookkeeping_ramified():
    module = FormalModule([exponential({Fraction(-3, 2): 1}, r=2)])
    bk = fourier_bookkeeping(module, '0-infty')
    assert bk.slopes_out == Counter({third: 3})
    assert bk.irr_out == 1


@pytest.mark.parametrize('module, flavor, x', [
    (FormalModule([exponential({-2: 1})]), 'infty-infty', None),
    (FormalModule([kummer(half)]), 'infty-infty', None),
    (FormalModule([exponential({-3: 1})]), 'infty-0', None),
    (FormalModule([kummer(half), exponential({-2: 1})]), 'infty-0', None),
    (FormalModule([exponential({-2: 1})]), 'infty-0', 2),
])
def test_wrong_slope_sector(module, flavor, x):
    with pytest.raises(WrongSlopeSector):
        fourier_bookkeeping(module, flavor, x)


def test_unknown_flavor():
    with pytest.raises(ValueError):
        fourier_bookkeeping(FormalModule(), 'sideways')


@given(modules(), points)
def test_bookkeeping_round_trip(module, x):
    bk = fourier_bookkeeping(module, '0-infty', x)
    assert bk.rank_out == module.rank + module.irregularity
    assert all(s < 1 for s in bk.slopes_out)

    back = fourier_bookkeeping(representative_module(bk), 'infty-0', x)
    assert back.rank_out == module.rank
    assert back.irr_out == module.irregularity
    assert back.slopes_out == module.slopes()
    assert back.class_label == x


def test_representative_module():
    bk = TransformBookkeeping(slopes_out=Counter({half: 2, 0: 1}), class_label=3)
    module = representative_module(bk)
    assert module.rank == 3
    assert module == FormalModule([
        twist_class(kummer(0), 3),
        twist_class(exponential({Fraction(-3, 2): 1}, r=2), 3),
    ])

    with pytest.raises(InvalidRamifiedData):
        representative_module(TransformBookkeeping(
            slopes_out=Counter({half: 1}), class_label=0))


def test_factory():
    assert isinstance(FourierFlavorFactory.produce(product='0-infty'),
                      FourierZeroInfinity)
    assert isinstance(FourierFlavorFactory.produce(product='infty-infty'),
                      FourierInfinityInfinity)
    flavor = FourierFlavorFactory.produce(product='FourierInfinityZero',
                                          point='2')
    assert isinstance(flavor, FourierInfinityZero)
    assert flavor.point == 2


def test_exact_transform():
    report = FourierZeroInfinity().transform(FormalModule([kummer(half)]))
    assert report.mode == 'exact'
    assert report.module == FormalModule([kummer(half)])
    assert report.notes == []

    report = FourierZeroInfinity().transform(FormalModule([kummer(half, unip=2)]))
    assert report.mode == 'exact'
    assert report.rank == 2
    assert any('derived rule' in note for note in report.notes)


def test_bookkeeping_transform():
    report = FourierZeroInfinity().transform(FormalModule([exponential({-2: 1})]))
    assert report.mode == 'bookkeeping'
    assert report.module is None
    assert report.rank == 2
    assert report.slopes == Counter({half: 2})


def test_oracle_transform():
    flavor = FourierZeroInfinity(use_oracle=True, truncation=30)
    report = flavor.transform(FormalModule([exponential({-2: -1})]))
    assert report.mode == 'oracle'
    assert report.rank == 2
    assert report.slopes == Counter({half: 2})
    assert report.precision == 30


def test_inverse_transform():
    flavor = FourierInfinityZero(point=2)
    report = flavor.transform(
        FormalModule([exponential({-2: 2}, residue=Fraction(4, 3))]))
    assert report.mode == 'exact'
    assert report.module == FormalModule([kummer(third)])
    assert report.class_label == 2


def test_infinity_infinity_transform():
    report = FourierInfinityInfinity().transform(
        FormalModule([exponential({-3: 1})]))
    assert report.mode == 'bookkeeping'
    assert report.class_label == 'infty'
