from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dmodpipe.core.errors import InconsistentRank, UnsupportedRamification
from dmodpipe.formal import (ElementaryModule, FormalModule, dual, end_of,
                             exponential, hor_rank, irregularity,
                             is_isomorphic, kummer, phi_mid_rank, phi_to_psi,
                             psi_to_phi, rank, slope_part, tensor_kummer)

half = Fraction(1, 2)
third = Fraction(1, 3)

residues = st.fractions(min_value=0, max_value=1, max_denominator=6)


@st.composite
def components(draw):
    polar = draw(st.dictionaries(st.integers(-4, -2),
                                 st.integers(-3, 3).filter(bool), max_size=2))
    return exponential(polar, residue=draw(residues),
                       unip=draw(st.integers(1, 3)))


@st.composite
def modules(draw, max_size=4):
    return FormalModule(draw(st.lists(components(), min_size=1,
                                      max_size=max_size)))


def test_rank_and_irregularity():
    assert rank(FormalModule([kummer(half)])) == 1
    assert irregularity(FormalModule([kummer(half)])) == 0
    assert irregularity(FormalModule([exponential({-2: 1})])) == 1
    ramified = FormalModule([exponential({Fraction(-5, 2): 1}, r=2)])
    assert rank(ramified) == 2
    assert irregularity(ramified) == 3


def test_components_from_dicts():
    m = FormalModule([dict(residue=half), dict(unip=2)])
    assert m == FormalModule([kummer(0, unip=2), kummer(half)])
    assert m.rank == 3


def test_slope_part():
    m = FormalModule([kummer(half), exponential({-2: 1})])
    assert slope_part(m, 0) == FormalModule([kummer(half)])
    assert slope_part(m, 1) == FormalModule([exponential({-2: 1})])
    assert len(slope_part(m, 5)) == 0


def test_slopes_counter():
    m = FormalModule([kummer(half), exponential({-3: 1}, unip=2)])
    assert m.slopes() == Counter({0: 1, 2: 2})


def test_tensor_kummer_and_dual():
    assert tensor_kummer(FormalModule([kummer(third)]), third) == \
        FormalModule([kummer(2 * third)])
    m = FormalModule([exponential({-2: 1}, residue=Fraction(1, 4))])
    assert dual(m) == FormalModule([exponential({-2: -1},
                                                residue=Fraction(3, 4))])


def test_end_of_kummer():
    assert end_of(FormalModule([kummer(third)])) == \
        FormalModule([ElementaryModule()])


def test_end_of_two_kummers():
    a, b = third, half
    expected = FormalModule([kummer(0), kummer(0), kummer(a - b), kummer(b - a)])
    assert end_of(FormalModule([kummer(a), kummer(b)])) == expected


def test_end_of_unipotent():
    assert end_of(FormalModule([kummer(0, unip=2)])) == \
        FormalModule([kummer(0, unip=1), kummer(0, unip=3)])


def test_end_of_ramified():
    with pytest.raises(UnsupportedRamification):
        end_of(FormalModule([exponential({Fraction(-3, 2): 1}, r=2)]))


@pytest.mark.parametrize('module, hor, phi_mid', [
    (FormalModule([kummer(0, unip=3)]), 1, 2),
    (FormalModule([kummer(half)]), 0, 1),
    (FormalModule([kummer(0), kummer(0)]), 2, 0),
    (FormalModule([exponential({-2: 1})]), 0, 1),
])
def test_horizontal_rank(module, hor, phi_mid):
    assert hor_rank(module) == hor
    assert phi_mid_rank(module) == phi_mid


@pytest.mark.parametrize('psi_module, phi_module', [
    (FormalModule([kummer(0, unip=2)]), FormalModule([kummer(0)])),
    (FormalModule([kummer(0), kummer(0)]), FormalModule()),
    (FormalModule([kummer(0, unip=3), kummer(0)]),
     FormalModule([kummer(0, unip=2)])),
])
def test_psi_phi_conversion(psi_module, phi_module):
    assert psi_to_phi(psi_module) == phi_module
    assert phi_to_psi(phi_module, psi_module.rank) == psi_module


def test_phi_to_psi_rank_too_small():
    with pytest.raises(InconsistentRank):
        phi_to_psi(FormalModule([kummer(0)]), 1)
    with pytest.raises(InconsistentRank):
        phi_to_psi(FormalModule([kummer(half)]), 0)


def test_is_isomorphic():
    a = FormalModule([kummer(half), exponential({-2: 1})])
    b = FormalModule([exponential({-2: 1}), kummer(half)])
    assert is_isomorphic(a, b)
    assert is_isomorphic(FormalModule([kummer(third)]),
                         FormalModule([kummer(4 * third)]))
    assert not is_isomorphic(FormalModule([exponential({-2: 1})]),
                             FormalModule([exponential({-2: 2})]))


@settings(max_examples=40, deadline=None)
@given(modules(max_size=3))
def test_end_properties(m):
    end = end_of(m)
    assert end.rank == m.rank ** 2
    assert end.irregularity >= 0
    same_f = len({c.f for c in m}) == 1
    assert (end.irregularity == 0) == same_f


@settings(max_examples=50, deadline=None)
@given(modules())
def test_dual_properties(m):
    assert dual(dual(m)) == m
    assert dual(m).slopes() == m.slopes()
    assert dual(m).irregularity == m.irregularity


@settings(max_examples=50, deadline=None)
@given(modules())
def test_slope_parts_partition(m):
    parts = FormalModule()
    for s in m.slopes():
        parts = parts + slope_part(m, s)
    assert parts == m


@settings(max_examples=50, deadline=None)
@given(modules())
def test_psi_phi_round_trip(m):
    assert phi_to_psi(psi_to_phi(m), m.rank) == m


@settings(max_examples=50, deadline=None)
@given(modules(), residues)
def test_tensor_kummer_invariants(m, gamma):
    twisted = tensor_kummer(m, gamma)
    assert twisted.rank == m.rank
    assert twisted.slopes() == m.slopes()
    assert twisted.irregularity == m.irregularity
    assert tensor_kummer(twisted, -gamma) == m
