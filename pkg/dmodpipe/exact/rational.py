"""
Helpers for the exact rational scalars used everywhere (`fractions.Fraction`).
"""
from fractions import Fraction
from math import gcd

__all__ = [
    'as_rational',
    'format_rational',
    'is_integral',
    'lcm',
    'frac_mod',
]


def as_rational(value):
    """
    Convert `value` to a Fraction.

    Accepts ints, Fractions, sympy/gmpy rationals (anything with integer
    ``numerator`` and ``denominator``) and strings ``"p/q"``.
    Floats are refused: the library never rounds.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError("refusing inexact value {!r}".format(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except AttributeError:
        raise TypeError("cannot interpret {!r} as a rational".format(value))


def format_rational(value):
    """ "p/q", or "p" for integers """
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def is_integral(value):
    return as_rational(value).denominator == 1


def lcm(*values):
    result = 1
    for v in values:
        result = result * v // gcd(result, v)
    return result


def frac_mod(value, modulus=Fraction(1)):
    """representative of `value` modulo `modulus` in [0, modulus)"""
    value = as_rational(value)
    modulus = as_rational(modulus)
    return value - modulus * (value // modulus)
