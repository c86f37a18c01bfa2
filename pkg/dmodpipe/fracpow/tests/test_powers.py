from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dmodpipe.core.errors import (InsufficientDepth, InsufficientPrecision,
                                  InvalidInput, RegularConnection)
from dmodpipe.exact import TruncatedPuiseuxSeries
from dmodpipe.fracpow import (FractionalPowerEngine, apply_power, apply_symbol,
                              check_heisenberg, check_radon_intertwiner,
                              power_table, symbol_from_connection)
from dmodpipe.io import encode

S = TruncatedPuiseuxSeries

powers = st.fractions(-2, 2, max_denominator=4)


@pytest.fixture(scope='module')
def engine():
    return FractionalPowerEngine(truncation=6)


@pytest.fixture(scope='module')
def exponential(engine):
    return engine.symbol({-2: -1})


def test_first_power_is_direct(exponential):
    table = power_table(exponential, 8)
    v = S({0: 1, 1: 2, 3: -1})
    power = apply_power(exponential, table, 1, 0, v, trunc=4)
    assert power.trunc == 4
    assert power.agrees_with(apply_symbol(exponential, 0, v))


def test_zeroth_power_is_identity(exponential):
    table = power_table(exponential, 8)
    v = S({Fraction(1, 3): 1, Fraction(4, 3): 5}, ram=3)
    power = apply_power(exponential, table, 0, Fraction(1, 3), v, trunc=5)
    assert power == v.truncate(5)


def test_inverse_power(engine, exponential):
    v = S.monomial(0)
    image = engine.apply(exponential, 1, v, trunc=4)
    back = engine.apply(exponential, -1, image)
    assert back.trunc == 6
    assert back.agrees_with(v)


def test_output_lattice(engine, exponential):
    image = engine.apply(exponential, Fraction(1, 2), S.monomial(0), trunc=3)
    # z^(0 - 1) k((z)) for a = 1/2, d = -2
    assert image.order == -1
    assert all(e.denominator == 1 for e in image.exponents())


@settings(max_examples=20, deadline=None)
@given(powers, powers)
def test_powers_add(engine, exponential, a1, a2):
    v = S({0: 1, 1: -1})
    inner = engine.apply(exponential, a2, v, trunc=-2 * a2 + 5)
    outer = engine.apply(exponential, a1, inner)
    direct = engine.apply(exponential, a1 + a2, v, trunc=-2 * (a1 + a2) + 5)
    assert outer.agrees_with(direct)


def test_exact_input_needs_truncation(exponential):
    table = power_table(exponential, 2)
    with pytest.raises(InsufficientPrecision):
        apply_power(exponential, table, Fraction(1, 2), 0, S.monomial(0))


def test_fixed_depth(exponential):
    shallow = FractionalPowerEngine(depth=2)
    with pytest.raises(InsufficientDepth):
        shallow.apply(exponential, Fraction(1, 2), S.monomial(0), trunc=10)


def test_lattice_mismatch(exponential):
    table = power_table(exponential, 2)
    with pytest.raises(InvalidInput):
        apply_power(exponential, table, 1, Fraction(1, 2), S.monomial(0), trunc=1)


@pytest.mark.parametrize('f, alpha', [
    ({-2: 1}, 2),
    ({-2: -1}, Fraction(1, 2)),
    ({-3: 1}, Fraction(-1, 3)),
    ({-3: 1, -2: 2}, Fraction(2, 5)),
])
def test_heisenberg(engine, f, alpha):
    report = engine.check_heisenberg(engine.symbol(f), alpha)
    assert report.passed, report.first_failure
    assert report.precision == 6


def test_heisenberg_integer_power_brute_force(engine):
    sym = engine.symbol({-2: 1})
    report = check_heisenberg(sym, engine.table(sym), 2, 6)
    fractional = check_heisenberg(sym, engine.table(sym), Fraction(1, 2), 6)
    assert report.n_checked > fractional.n_checked
    assert report.passed


def test_heisenberg_ramified(engine):
    sym = engine.symbol(S({Fraction(-3, 2): 1}, ram=2))
    assert engine.check_heisenberg(sym, Fraction(1, 2)).passed


@pytest.mark.parametrize('f, alpha', [
    ({-2: -1}, Fraction(1, 3)),
    ({-3: 1}, Fraction(1, 2)),
    ({-2: -1}, 0),
    ({-2: 1, -1: Fraction(1, 4)}, Fraction(-2, 3)),
])
def test_radon_intertwiner(engine, f, alpha):
    report = engine.check_radon_intertwiner(f, alpha)
    assert report.passed, report.first_failure


def test_radon_intertwiner_without_engine():
    assert check_radon_intertwiner({-2: -1}, Fraction(1, 3), 4).passed
    with pytest.raises(RegularConnection):
        check_radon_intertwiner({}, Fraction(1, 3), 4)


def test_table_report(engine):
    report = engine.table_report(engine.symbol({-2: 3}), depth=4,
                                 alpha=Fraction(1, 2))
    assert report.d == -2
    assert report.depth >= 4
    assert all(check.passed for check in report.checks)
    doc = encode(report)
    assert doc['entries'][0] == {'0,0': '1'}
    assert doc['leading'] == '3'
