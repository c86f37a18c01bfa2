"""
Bivariate polynomials Σ c_ij a^i b^j over Q.

They are sympy sparse polynomials in ``QQ[a, b]``; a `PolyElement` is
itself a dict ``(i, j) -> coefficient`` with no stored zeros, which is
exactly the representation the power tables need.
"""
from fractions import Fraction

from sympy import QQ
from sympy.polys.rings import ring

from .rational import as_rational, format_rational

__all__ = [
    'BIPOLY_RING',
    'A',
    'B',
    'to_qq',
    'from_qq',
    'bipoly',
    'bipoly_terms',
    'shift_variable',
    'evaluate',
    'specialize_a',
    'bipoly_to_json',
]

BIPOLY_RING, A, B = ring("a,b", QQ)


def to_qq(value):
    """ Fraction (or anything `as_rational` takes) -> sympy QQ element """
    value = as_rational(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value):
    """ sympy QQ element -> Fraction """
    return Fraction(int(value.numerator), int(value.denominator))


def bipoly(terms=None, poly_ring=BIPOLY_RING):
    """
    Build a polynomial from ``{(i, j): coeff}``.
    """
    return poly_ring({
        tuple(monom): to_qq(coeff)
        for monom, coeff in (terms or {}).items()
        if as_rational(coeff) != 0
    })


def bipoly_terms(p):
    """ ``{(i, j): Fraction}`` view of a polynomial """
    return {monom: from_qq(coeff) for monom, coeff in p.items()}


def shift_variable(p, gen, amount):
    """ p with `gen` replaced by ``gen + amount`` """
    return p.compose(gen, gen + to_qq(amount))


def evaluate(p, *values):
    """ value of `p` at rational points, as a Fraction """
    return from_qq(p(*[to_qq(v) for v in values]))


def specialize_a(p, alpha):
    """ p(alpha, b), kept in the same ring """
    return p.subs(A, to_qq(alpha))


def bipoly_to_json(p):
    """ ``{"i,j": "p/q"}`` for JSON output """
    return {
        ','.join(str(k) for k in monom): format_rational(from_qq(coeff))
        for monom, coeff in sorted(p.items())
    }
