"""
Exact arithmetic substrate: rationals, truncated Puiseux series,
bivariate polynomials and discrete summation.
"""
from .bipoly import (A, B, BIPOLY_RING, bipoly, bipoly_terms, evaluate,
                     shift_variable, specialize_a)
from .rational import as_rational, format_rational, frac_mod, is_integral, lcm
from .series import TruncatedPuiseuxSeries, series_arith, series_derive
from .summation import (discrete_antiderivative, falling_factorial,
                        pochhammer_ratio)

__all__ = [
    'A',
    'B',
    'BIPOLY_RING',
    'bipoly',
    'bipoly_terms',
    'evaluate',
    'shift_variable',
    'specialize_a',
    'as_rational',
    'format_rational',
    'frac_mod',
    'is_integral',
    'lcm',
    'TruncatedPuiseuxSeries',
    'series_arith',
    'series_derive',
    'discrete_antiderivative',
    'falling_factorial',
    'pochhammer_ratio',
]
