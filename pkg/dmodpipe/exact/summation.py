"""
Discrete calculus over Q: Γ-function ratios through their recurrence and
indefinite summation of polynomials.
"""
from fractions import Fraction

from sympy.functions.combinatorial.numbers import stirling

from ..core.errors import IntegerResidue
from .bipoly import A
from .rational import as_rational

__all__ = [
    'pochhammer_ratio',
    'falling_factorial',
    'discrete_antiderivative',
]


def pochhammer_ratio(alpha, k):
    """
    Γ(-α-k)/Γ(-α), computed with Γ(x) = Γ(x+1)/x.

    For k > 0 this is Π_{j=1..k} 1/(-α-j), for k < 0 it is
    Π_{j=0..-k-1} (-α+j), and 1 for k = 0.

    Parameters
    ----------
    alpha: rational
        must not be an integer (Γ has poles there)
    k: int

    Raises
    ------
    IntegerResidue
        if alpha is an integer
    """
    alpha = as_rational(alpha)
    if alpha.denominator == 1:
        raise IntegerResidue(
            "Γ-ratio undefined for integral exponent {}".format(alpha))
    result = Fraction(1)
    if k > 0:
        for j in range(1, k + 1):
            result /= (-alpha - j)
    else:
        for j in range(0, -k):
            result *= (-alpha + j)
    return result


def falling_factorial(x, m):
    """ x (x-1) ... (x-m+1) for a ring element `x` """
    result = x.ring.one
    for j in range(m):
        result *= (x - j)
    return result


def _stirling2(n, m):
    return int(stirling(n, m, kind=2))


def discrete_antiderivative(p, variable=A):
    """
    The polynomial q with q(0) = 0 and q(x) - q(x-1) = p(x) in `variable`.

    `p` is expanded in falling factorials, x^k = Σ_m S(k,m) (x)_m, and each
    (x)_m is summed by (x+1)_(m+1)/(m+1), minus its value at 0 for m = 0.

    Parameters
    ----------
    p: sympy PolyElement
        polynomial in ``QQ[a, b]`` (or any sympy sparse ring)
    variable: PolyElement
        a generator of that ring

    Returns
    -------
    PolyElement
    """
    poly_ring = p.ring
    idx = poly_ring.gens.index(variable)

    # Σ_m c_m(rest) * (x)_m
    falling = {}
    for monom, coeff in p.items():
        k = monom[idx]
        rest = list(monom)
        rest[idx] = 0
        rest_term = poly_ring({tuple(rest): coeff})
        for m in range(0, k + 1):
            s = _stirling2(k, m)
            if s:
                falling[m] = falling.get(m, poly_ring.zero) + rest_term * s

    antiderivative = poly_ring.zero
    for m, c_m in falling.items():
        if m == 0:
            summed = variable
        else:
            summed = falling_factorial(variable + 1, m + 1) * \
                poly_ring.domain(1, m + 1)
        antiderivative += c_m * summed
    return antiderivative

