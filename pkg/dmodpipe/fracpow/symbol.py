"""
Operator symbols: P(Σ c_β z^β) = Σ c_β Σ_i p_i(β) z^(β + (d+i)/r).

The symbol of P = (1/C)(d/dz + f) for an irregular connection f with
leading term C·z^(e0) has d = r·e0, p_0 = 1, the terms of f/C at the
indices r(e - e0) and the derivative β/C at the index r(-1 - e0).
"""
from fractions import Fraction
from math import ceil

from ..core.errors import (InsufficientPrecision, InvalidInput,
                           RegularConnection)
from ..exact import (B, BIPOLY_RING, TruncatedPuiseuxSeries, as_rational,
                     evaluate, format_rational, lcm)
from ..exact.bipoly import to_qq

__all__ = ['OperatorSymbol', 'symbol_from_connection', 'apply_symbol',
           'check_lattice']


class OperatorSymbol:
    """
    Parameters
    ----------
    d: int
        degree offset in steps of 1/r
    p: list
        p_0, p_1, ... as polynomials in b (elements of ``QQ[a, b]``)
    C: rational
        leading coefficient of the connection
    ram: int
        ramification index r
    f: TruncatedPuiseuxSeries or None
        the connection the symbol was built from
    known: int or None
        p_i is determined for i < known; None if every p_i is known
    """
    __slots__ = ('d', 'p', 'C', 'ram', 'f', 'known')

    def __init__(self, d, p, C=1, ram=1, f=None, known=None):
        self.d = int(d)
        self.p = [BIPOLY_RING(q) for q in p]
        self.C = as_rational(C)
        self.ram = int(ram)
        self.f = f
        self.known = known
        if not self.p or self.p[0] != BIPOLY_RING.one:
            raise InvalidInput("operator symbols need p_0 = 1")
        if any(q.degree(0) > 0 for q in self.p):
            raise InvalidInput("symbol coefficients depend on b only")

    def coefficient(self, i):
        """ p_i(b); zero beyond the stored list """
        if self.known is not None and i >= self.known:
            raise InsufficientPrecision(
                "p_{} is not determined by the truncated connection".format(i))
        if i < len(self.p):
            return self.p[i]
        return BIPOLY_RING.zero

    def key(self):
        return (self.d, self.ram, self.C, self.known,
                tuple(tuple(sorted(q.items())) for q in self.p))

    def __eq__(self, other):
        if not isinstance(other, OperatorSymbol):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "OperatorSymbol(d={}, r={}, C={}, p={})".format(
            self.d, self.ram, format_rational(self.C),
            [str(q.as_expr()) for q in self.p])


def symbol_from_connection(f, r=None):
    """
    Symbol of P = (1/C)(d/dz + f).

    Parameters
    ----------
    f: TruncatedPuiseuxSeries or dict
        the connection; its lowest exponent must be < -1
    r: int or None
        ramification index, by default that of `f`

    Raises
    ------
    RegularConnection
        if f has no term below z^-1
    """
    if not isinstance(f, TruncatedPuiseuxSeries):
        f = TruncatedPuiseuxSeries(f)
    r = f.ram if r is None else int(r)
    try:
        f = f.with_ram(r)
    except ValueError as err:
        raise InvalidInput(str(err))
    if f.order is None or f.order >= -1:
        raise RegularConnection(
            "P = (1/C)∂ needs an irregular connection, got f = {}".format(f))

    e0 = f.order
    C = f.leading_coefficient
    derivative_index = int(r * (-1 - e0))

    known = None
    if f.trunc is not None:
        known = int(ceil(r * (f.trunc - e0)))
        if derivative_index >= known:
            raise InsufficientPrecision(
                "the connection must be known up to z^-1, known below z^{}"
                .format(format_rational(f.trunc)))

    coeffs = {}
    for e, c in f.items():
        i = int(r * (e - e0))
        coeffs[i] = coeffs.get(i, BIPOLY_RING.zero) + to_qq(c / C)
    coeffs[derivative_index] = (coeffs.get(derivative_index, BIPOLY_RING.zero)
                                + B * to_qq(1 / C))
    length = max(coeffs) + 1
    p = [coeffs.get(i, BIPOLY_RING.zero) for i in range(length)]
    return OperatorSymbol(int(r * e0), p, C, r, f=f, known=known)


def check_lattice(gamma, series, ram):
    """ refuse a series with exponents outside γ + (1/r)Z """
    gamma = as_rational(gamma)
    for e in series.exponents():
        if ((e - gamma) * ram).denominator != 1:
            raise InvalidInput("exponent {} is not in {} + (1/{})Z".format(
                format_rational(e), format_rational(gamma), ram))


def apply_symbol(sym, gamma, v):
    """
    P·v applied directly: (v' + f·v)/C when the symbol carries its
    connection, else termwise from the p_i(β).
    """
    check_lattice(gamma, v, sym.ram)
    if sym.f is not None:
        return (v.derivative() + sym.f * v).scale(1 / sym.C)

    coeffs = {}
    exponents = []
    for beta, c in v.items():
        for i, q in enumerate(sym.p):
            e = beta + Fraction(sym.d + i, sym.ram)
            exponents.append(e)
            coeffs[e] = coeffs.get(e, 0) + c * evaluate(q, 0, beta)
    trunc = None
    if v.trunc is not None:
        trunc = v.trunc + Fraction(sym.d, sym.ram)
        exponents.append(trunc)
    ram = lcm(v.ram, sym.ram, *(e.denominator for e in exponents))
    return TruncatedPuiseuxSeries(coeffs, ram=ram, trunc=trunc)
