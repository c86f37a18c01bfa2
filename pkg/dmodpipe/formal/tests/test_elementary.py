from fractions import Fraction

import pytest

from dmodpipe.core.errors import InsufficientPrecision, InvalidInput
from dmodpipe.exact import TruncatedPuiseuxSeries
from dmodpipe.formal import ElementaryModule, canonicalize, exponential, kummer, slope

S = TruncatedPuiseuxSeries


def test_slope():
    assert slope(kummer(Fraction(1, 2))) == 0
    assert slope(exponential({-2: 3})) == 1
    assert slope(exponential({Fraction(-5, 2): 1}, r=2)) == Fraction(3, 2)


def test_rank_and_irregularity():
    e = exponential({Fraction(-5, 2): 1}, r=2)
    assert e.rank == 2
    assert e.irregularity == 3
    assert kummer(0, unip=3).rank == 3


def test_gauge_drops_holomorphic_terms():
    e = exponential({-2: 1, 0: 5, 1: 2}, residue=Fraction(1, 3))
    assert e.f == S({-2: 1})
    assert e.residue == Fraction(1, 3)


def test_residue_relocation():
    e = exponential({-2: 1, -1: Fraction(1, 4)})
    assert e.f == S({-2: 1})
    assert e.residue == Fraction(1, 4)


def test_residue_modulo():
    assert kummer(Fraction(7, 3)).residue == Fraction(1, 3)
    assert kummer(Fraction(-1, 4)).residue == Fraction(3, 4)
    ramified = exponential({Fraction(-3, 2): 1}, residue=Fraction(3, 4), r=2)
    assert ramified.residue == Fraction(1, 4)


def test_sign_normalization_r2():
    e = exponential({Fraction(-5, 2): -1, -2: 3}, r=2)
    assert e.f == S({Fraction(-5, 2): 1, -2: 3}, ram=2)
    assert e == exponential({Fraction(-5, 2): 1, -2: 3}, r=2)


def test_canonicalize_is_idempotent():
    e = exponential({-3: 2, -1: 5, 2: 1}, residue=Fraction(2, 3))
    assert canonicalize(e) == e
    assert canonicalize(canonicalize(e)) == e


def test_truncated_exponential_part():
    # terms at exponent > -1 may be unknown, the polar part may not
    e = ElementaryModule(S({-2: 1}, trunc=0))
    assert e.f == S({-2: 1})
    assert e.f.is_exact
    with pytest.raises(InsufficientPrecision):
        ElementaryModule(S({-3: 1}, trunc=-1))


@pytest.mark.parametrize('kwargs', [
    dict(r=0),
    dict(unip=0),
    dict(f=S({Fraction(-3, 2): 1}, ram=2), r=3),
])
def test_invalid_components(kwargs):
    with pytest.raises(InvalidInput):
        ElementaryModule(**kwargs)


def test_dual():
    e = exponential({-2: 1}, residue=Fraction(1, 4))
    d = e.dual()
    assert d.f == S({-2: -1})
    assert d.residue == Fraction(3, 4)
    assert d.dual() == e


def test_ordering_and_hash():
    a = kummer(Fraction(1, 2))
    b = exponential({-2: 1})
    assert len({a, b, kummer(Fraction(3, 2))}) == 2
    assert sorted([b, a]) == sorted([a, b])


def test_repr():
    assert repr(kummer(Fraction(1, 3))) == "E(residue=1/3)"
    assert "unip=2" in repr(kummer(0, unip=2))
