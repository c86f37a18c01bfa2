"""
Linear differential operators Σ a_j(t) ∂^j with truncated Puiseux series
coefficients, and the slope data read off their Newton polygon.
"""
from collections import Counter
from fractions import Fraction
from math import comb

from ..core.errors import InsufficientPrecision
from ..exact import TruncatedPuiseuxSeries, as_rational, format_rational
from .elementary import ElementaryModule

__all__ = [
    'DifferentialOperator',
    'newton_polygon',
    'newton_slopes',
    'twist_operator',
    'determinant_exponent',
]


def _series(value):
    if isinstance(value, TruncatedPuiseuxSeries):
        return value
    if isinstance(value, dict):
        return TruncatedPuiseuxSeries(value)
    return TruncatedPuiseuxSeries({0: as_rational(value)})


class DifferentialOperator:
    """
    L = Σ_j a_j ∂^j

    Parameters
    ----------
    coefficients: list
        a_0, ..., a_n as `TruncatedPuiseuxSeries` (dicts and scalars are
        converted); trailing zero coefficients are dropped
    """
    __slots__ = ('coefficients',)

    def __init__(self, coefficients):
        coeffs = [_series(a) for a in coefficients]
        while coeffs and coeffs[-1].is_zero and coeffs[-1].is_exact:
            coeffs.pop()
        if not coeffs:
            raise ValueError("the zero operator has no order")
        self.coefficients = tuple(coeffs)

    @property
    def order(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1]

    @classmethod
    def derivation(cls):
        """ the operator ∂ """
        return cls([0, 1])

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        zero = TruncatedPuiseuxSeries.zero()
        return DifferentialOperator([
            (self.coefficients[j] if j < len(self.coefficients) else zero)
            + (other.coefficients[j] if j < len(other.coefficients) else zero)
            for j in range(n)
        ])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar):
        return DifferentialOperator([a * scalar for a in self.coefficients])

    def left_multiply(self, series):
        """ the operator b·L """
        return DifferentialOperator([series * a for a in self.coefficients])

    def __mul__(self, other):
        """
        composition L∘M, using ∂^i b = Σ_l C(i, l) b^(l) ∂^(i-l)
        """
        if not isinstance(other, DifferentialOperator):
            return self.scale(other)
        result = [TruncatedPuiseuxSeries.zero()] * (self.order + other.order + 1)
        for i, a in enumerate(self.coefficients):
            for k, b in enumerate(other.coefficients):
                derivative = b
                for l in range(0, i + 1):
                    if l > 0:
                        derivative = derivative.derivative()
                    term = a * derivative * comb(i, l)
                    result[i - l + k] = result[i - l + k] + term
        return DifferentialOperator(result)

    def power(self, n):
        result = DifferentialOperator([1])
        for _ in range(n):
            result = result * self
        return result

    def normalized(self):
        """ divided by the lowest term of the leading coefficient """
        lead = self.leading
        return self.scale(1 / lead.leading_coefficient)

    def __eq__(self, other):
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __repr__(self):
        terms = []
        for j, a in enumerate(self.coefficients):
            if a.is_zero and a.is_exact:
                continue
            terms.append("({})∂^{}".format(a, j))
        return "DifferentialOperator({})".format(" + ".join(terms) or "0")


def _lower_hull(points):
    """ lower convex hull of points sorted by x (monotone chain) """
    hull = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the segment hull[-2] -> p
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def newton_polygon(operator):
    """
    Points (j, ord a_j - j) and the slope data they determine.

    Returns
    -------
    points: list of (int, Fraction)
    edges: list of (slope, length)
        the horizontal edge first (slope 0, length = rightmost position of
        the minimum), then the positive edges of the lower hull from there
        to the leading term

    Raises
    ------
    InsufficientPrecision
        if a coefficient with no known term could still lie below the hull
    """
    if operator.leading.order is None:
        raise InsufficientPrecision("leading coefficient has no known term")
    points = []
    undetermined = []
    for j, a in enumerate(operator.coefficients):
        if a.order is not None:
            points.append((j, a.order - j))
        elif not a.is_exact:
            undetermined.append((j, a.trunc - j))

    y_min = min(y for _, y in points)
    j_star = max(j for j, y in points if y == y_min)
    hull = _lower_hull([p for p in points if p[0] >= j_star])

    edges = []
    if j_star > 0:
        edges.append((Fraction(0), j_star))
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        edges.append((Fraction(y2 - y1) / (x2 - x1), x2 - x1))

    for j, bound in undetermined:
        if bound <= _hull_height(j, j_star, y_min, hull):
            raise InsufficientPrecision(
                "order of coefficient a_{} undetermined below z^{}".format(
                    j, format_rational(bound + j)))
    return points, edges


def _hull_height(x, j_star, y_min, hull):
    if x <= j_star:
        return y_min
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if x1 <= x <= x2:
            return y1 + Fraction(y2 - y1) * (x - x1) / (x2 - x1)
    return hull[-1][1]


def newton_slopes(operator):
    """
    Slopes of the module presented by `operator`.

    Returns
    -------
    slopes: Counter
        slope -> multiplicity
    irregularity: Fraction
        Σ slope·multiplicity
    """
    _, edges = newton_polygon(operator)
    slopes = Counter()
    for s, length in edges:
        slopes[s] += length
    irr = sum((s * m for s, m in slopes.items()), Fraction(0))
    return slopes, irr


def twist_operator(operator, lam):
    """
    Σ a_j (∂ - λ/t)^j: if L kills v, the result kills t^λ·v, so it presents
    the module tensored with K^λ.
    """
    lam = as_rational(lam)
    shifted = DifferentialOperator([{-1: -lam}, 1])
    result = None
    power = DifferentialOperator([1])
    for j, a in enumerate(operator.coefficients):
        if j > 0:
            power = power * shifted
        if a.is_zero and a.is_exact:
            continue
        term = power.left_multiply(a)
        result = term if result is None else result + term
    return result


def determinant_exponent(operator):
    """
    The determinant of the presented module as a rank-one elementary
    module: its connection is read from -a_(n-1)/a_n (the logarithmic
    derivative of the Wronskian), keeping the polar part; the residue is
    taken modulo Z.
    """
    n = operator.order
    if n == 0:
        return ElementaryModule()
    lead = operator.coefficients[n]
    sub = operator.coefficients[n - 1]
    if sub.is_zero:
        return ElementaryModule()
    need = max(0, -sub.order) + 1
    ratio = sub * lead.inverse(trunc=need)
    if ratio.trunc is not None and ratio.trunc < 0:
        raise InsufficientPrecision(
            "polar part of the determinant needs terms up to z^0")
    polar = {e: -c for e, c in ratio.items() if e < 0}
    return ElementaryModule(TruncatedPuiseuxSeries(polar, ram=ratio.ram))
