from fractions import Fraction

import pytest

from dmodpipe.core.errors import (InsufficientPrecision, NoRelationFound,
                                  UnsupportedRamification)
from dmodpipe.exact import TruncatedPuiseuxSeries, is_integral
from dmodpipe.formal import DifferentialOperator, newton_slopes
from dmodpipe.tate import (LocalFourierOracle, Realization, annihilator,
                           fourier_relation, local_fourier_invariants,
                           topology_compare)

S = TruncatedPuiseuxSeries
half = Fraction(1, 2)


@pytest.fixture(scope='module')
def oracle():
    return LocalFourierOracle(truncation=40)


@pytest.mark.parametrize('alpha', [half, Fraction(1, 3), Fraction(-1, 4), 0, -1])
def test_kummer_transform(alpha):
    report = local_fourier_invariants(residue=alpha, trunc=30)
    assert report.rank_out == 1
    assert report.slopes_out == [[0, 1]]
    assert is_integral(report.residue_out - alpha - 1)
    assert report.mode == 'oracle'
    assert report.precision == 30


def test_kummer_residue_unreduced(oracle):
    report = oracle.local_fourier_invariants(residue=Fraction(1, 3))
    assert report.residue_out == Fraction(4, 3)


def test_kummer_annihilator(oracle):
    real = oracle.realize(residue=half)
    assert oracle.annihilator(real) == DifferentialOperator([-Fraction(3, 2), {1: 1}])


def test_trivial_annihilator(oracle):
    real = oracle.realize()
    assert real.extended
    assert oracle.annihilator(real) == DifferentialOperator([-1, {1: 1}])


@pytest.mark.parametrize('f, s', [
    ({-2: -1}, 1),
    ({-3: 1}, 2),
    ({-4: 2}, 3),
])
def test_irregular_transform(oracle, f, s):
    report = oracle.local_fourier_invariants(f)
    assert report.rank_out == 1 + s
    assert report.slopes_out == [[Fraction(s, 1 + s), 1 + s]]
    assert report.residue_out is None


def test_output_slopes_below_one(oracle):
    for f in ({-2: 3, -1: half}, {-3: -1, -2: 1}):
        slopes, _ = newton_slopes(oracle.annihilator(oracle.realize(f)))
        assert all(s < 1 for s in slopes)


@pytest.mark.parametrize('f, residue', [
    ({}, half),
    ({-2: -1}, 0),
    ({-2: 2}, Fraction(1, 3)),
    ({-3: 1}, 0),
    ({-3: 1, -2: -1}, Fraction(-1, 5)),
])
def test_closed_form_relation(oracle, f, residue):
    real = oracle.realize(f, residue)
    assert oracle.annihilator(real) == fourier_relation(f, residue)


def test_closed_form_exponential():
    c = -1
    alpha = Fraction(1, 3)
    expected = DifferentialOperator([c, {2: -alpha}, {3: 1}])
    assert fourier_relation({-2: c}, alpha) == expected


@pytest.mark.parametrize('f, residue', [
    ({}, Fraction(1, 3)),
    ({-2: -1}, 0),
    ({-3: 1}, 0),
])
def test_stable_under_larger_window(f, residue):
    small = local_fourier_invariants(f, residue, trunc=40)
    large = local_fourier_invariants(f, residue, trunc=50)
    assert small.operator == large.operator
    assert small.slopes_out == large.slopes_out
    assert small.residue_out == large.residue_out


def test_ramified_input_refused(oracle):
    real = Realization(S({Fraction(-3, 2): 1}, ram=2))
    with pytest.raises(UnsupportedRamification):
        oracle.annihilator(real)
    with pytest.raises(UnsupportedRamification):
        fourier_relation(S({Fraction(-3, 2): 1}, ram=2))


def test_small_window():
    # every ζ-multiple of the generator vanishes below z^3
    with pytest.raises(InsufficientPrecision):
        local_fourier_invariants({-4: 2}, trunc=3)


def test_no_relation_below_rank():
    real = Realization({-3: 1})
    with pytest.raises(NoRelationFound):
        annihilator(real, max_order=2, trunc=60)


def test_topology_kummer():
    report = topology_compare(Realization(residue=half), 3)
    assert report.forward == 3
    assert report.backward == 3


def test_topology_irregular():
    report = topology_compare(Realization({-2: -1}), 2)
    assert report.forward == 1
    assert report.backward == 1
    assert report.lattice_order == 0


@pytest.mark.parametrize('real', [
    Realization(residue=half),
    Realization({-2: -1}),
    Realization(extended=True),
])
def test_topology_at_depth_zero(real):
    report = topology_compare(real, 0)
    assert (report.forward, report.backward) == (0, 0)


def test_topology_window_exhausted():
    with pytest.raises(InsufficientPrecision):
        topology_compare(Realization(residue=half), 40, trunc=40)
