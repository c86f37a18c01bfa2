from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from dmodpipe.formal import FormalModule, exponential, kummer
from dmodpipe.transforms import (class_label, ell, infinity_decompose,
                                 twist_class, untwist_class)

half = Fraction(1, 2)


@st.composite
def modules_at_infinity(draw):
    components = []
    for _ in range(draw(st.integers(1, 4))):
        polar = draw(st.dictionaries(st.integers(-4, -2),
                                     st.integers(-3, 3).filter(bool),
                                     max_size=2))
        residue = draw(st.fractions(0, 1, max_denominator=5))
        components.append(exponential(polar, residue=residue,
                                      unip=draw(st.integers(1, 2))))
    return FormalModule(components)


def test_ell():
    assert ell(3).slope == 1
    assert class_label(ell(3)) == 3
    assert ell(Fraction(1, 2), r=2).rank == 2


def test_twist_and_untwist():
    twisted = twist_class(kummer(half), 3)
    assert twisted == exponential({-2: 3}, residue=half)
    assert untwist_class(twisted, 3) == kummer(half)
    assert twist_class(kummer(half), 0) == kummer(half)


def test_kummer_is_class_zero():
    result = infinity_decompose(FormalModule([kummer(Fraction(1, 3))]))
    assert list(result.classes) == [0]
    assert len(result.over1) == 0


def test_classes_and_slope_above_one():
    lx = twist_class(kummer(half), 3)
    steep = exponential({-3: 1})
    result = infinity_decompose(FormalModule([kummer(half), lx, steep]))
    assert result.over1 == FormalModule([steep])
    assert result.classes[0] == FormalModule([kummer(half)])
    assert result.classes[3] == FormalModule([lx])


def test_empty_module():
    result = infinity_decompose(FormalModule())
    assert len(result.over1) == 0
    assert not result.classes


@given(modules_at_infinity())
def test_decomposition_partitions(module):
    result = infinity_decompose(module)
    total = result.over1.rank + sum(m.rank for m in result.classes.values())
    assert total == module.rank
    assert all(c.slope > 1 for c in result.over1)
    for x, part in result.classes.items():
        assert all(untwist_class(c, x).slope < 1 for c in part)
