"""
Power tables: the polynomials p_i(a, b) with

    P^a(z^b) = Σ_i p_i(a, b) z^(b + (a·d + i)/r)

for every rational a, built by induction on i from P^a = P·P^(a-1).
"""
import logging
from fractions import Fraction

from sympy import QQ
from sympy.polys.rings import ring

from ..core.errors import InsufficientDepth
from ..exact import (A, B, BIPOLY_RING, discrete_antiderivative,
                     shift_variable, specialize_a)
from ..exact.bipoly import to_qq
from ..io.containers import IdentityCheckContainer

log = logging.getLogger(__name__)

__all__ = ['PowerTable', 'power_table', 'validate_table', 'check_addition']

# a', a'', b for the addition identity
TRIPLE_RING, A1, A2, B3 = ring("a1,a2,b", QQ)


class PowerTable:
    """
    Parameters
    ----------
    symbol: OperatorSymbol
    entries: list
        p_0(a, b), ..., p_I(a, b) in ``QQ[a, b]``
    """
    __slots__ = ('symbol', 'entries')

    def __init__(self, symbol, entries):
        self.symbol = symbol
        self.entries = [BIPOLY_RING(p) for p in entries]

    @property
    def depth(self):
        return len(self.entries) - 1

    def entry(self, i):
        if i > self.depth:
            raise InsufficientDepth(
                "p_{} requested from a table of depth {}".format(i, self.depth))
        return self.entries[i]

    def __repr__(self):
        return "PowerTable(depth={}, {!r})".format(self.depth, self.symbol)


def _step(symbol, j):
    """ b + ((a-1)·d + j)/r, the exponent P meets after P^(a-1) """
    return B + (A - 1) * to_qq(Fraction(symbol.d, symbol.ram)) \
        + to_qq(Fraction(j, symbol.ram))


def power_table(sym, depth, start=None):
    """
    p_0, ..., p_depth of the symbol `sym`.

    p_i(a, b) - p_i(a-1, b) = Σ_{j<i} p_(i-j)(b + ((a-1)d + j)/r)·p_j(a-1, b)
    and p_i(0, b) = 0 for i > 0, so p_i is the discrete antiderivative in
    a of the right-hand side.

    Parameters
    ----------
    start: PowerTable or None
        an existing shallower table of the same symbol to extend
    """
    entries = [BIPOLY_RING.one] if start is None else list(start.entries)
    shifted = [shift_variable(p, A, -1) for p in entries]
    for i in range(len(entries), depth + 1):
        difference = BIPOLY_RING.zero
        for j in range(i):
            q = sym.coefficient(i - j)
            if q:
                difference += q.compose(B, _step(sym, j)) * shifted[j]
        p_i = discrete_antiderivative(difference, A)
        entries.append(p_i)
        shifted.append(shift_variable(p_i, A, -1))
        log.debug("p_%d has degree %d in a and %d in b", i,
                  max(p_i.degree(0), 0), max(p_i.degree(1), 0))
    return PowerTable(sym, entries)


def _report(identity, checked, failure, precision=None):
    return IdentityCheckContainer(
        identity=identity,
        passed=failure is None,
        n_checked=checked,
        first_failure=failure,
        precision=precision,
    )


def validate_table(table):
    """
    p_0 = 1, p_i(1, b) = p_i(b) and p_i(0, b) = 0 for i > 0, as exact
    polynomial identities.

    Returns
    -------
    list of IdentityCheckContainer
    """
    sym = table.symbol
    base = None if table.entries[0] == BIPOLY_RING.one else "p_0 != 1"

    first_power = None
    zeroth_power = None
    for i, p in enumerate(table.entries):
        if first_power is None and specialize_a(p, 1) != sym.coefficient(i):
            first_power = "i = {}".format(i)
        if zeroth_power is None and i > 0 and specialize_a(p, 0):
            zeroth_power = "i = {}".format(i)

    n = len(table.entries)
    return [
        _report('p_0(a, b) = 1', 1, base),
        _report('p_i(1, b) = p_i(b)', n, first_power),
        _report('p_i(0, b) = 0', n - 1, zeroth_power),
    ]


def _lift(p, a_expr, b_expr):
    """ p(a_expr, b_expr) in the ring of a', a'', b """
    result = TRIPLE_RING.zero
    for (i, j), c in p.items():
        result += c * a_expr ** i * b_expr ** j
    return result


def check_addition(table, depth=None):
    """
    p_i(a' + a'', b) = Σ_j p_(i-j)(a', b + (a''·d + j)/r)·p_j(a'', b) for
    every i ≤ depth, as an identity in QQ[a', a'', b].

    Returns
    -------
    IdentityCheckContainer
    """
    sym = table.symbol
    if depth is None:
        depth = table.depth
    if depth > table.depth:
        raise InsufficientDepth("addition checked up to {} on a table of "
                                "depth {}".format(depth, table.depth))
    step = to_qq(Fraction(sym.d, sym.ram))
    second = [_lift(p, A2, B3) for p in table.entries[:depth + 1]]

    failure = None
    for i in range(depth + 1):
        lhs = _lift(table.entries[i], A1 + A2, B3)
        rhs = TRIPLE_RING.zero
        for j in range(i + 1):
            shift = B3 + A2 * step + to_qq(Fraction(j, sym.ram))
            rhs += _lift(table.entries[i - j], A1, shift) * second[j]
        if lhs != rhs:
            failure = "i = {}".format(i)
            log.warning("addition identity fails at %s", failure)
            break
    return _report("P^(a'+a'') = P^a'·P^a''", depth + 1, failure)
