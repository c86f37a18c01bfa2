"""
Truncated Puiseux series with exact rational coefficients.

A series is a finite map from exponents in (1/r)Z to rational coefficients
together with a truncation bound: coefficients at exponents at or above
the bound are *unknown*, not zero. A bound of None marks an exact series
(a Laurent polynomial in z^(1/r)), which is how exponential parts of
connections are stored.

Every arithmetic operation propagates the bound pessimistically, so a
result never claims knowledge of a coefficient its inputs did not
determine.
"""
from fractions import Fraction
from math import ceil
from types import MappingProxyType

from ..core.errors import InsufficientPrecision, NotAUnit
from .rational import as_rational, format_rational, lcm

__all__ = [
    'TruncatedPuiseuxSeries',
    'series_arith',
    'series_derive',
]


def _lt(e, bound):
    return bound is None or e < bound


def _min_bound(*bounds):
    known = [b for b in bounds if b is not None]
    return min(known) if known else None


def _add_bound(bound, shift):
    return None if bound is None or shift is None else bound + shift


class TruncatedPuiseuxSeries:
    """
    Σ_e c_e z^e, e ∈ (1/ram)Z, known for e < trunc.

    Parameters
    ----------
    coeffs: dict
        exponent -> coefficient; anything `as_rational` understands
    ram: int
        ramification index r
    trunc: rational or None
        truncation bound τ, None for an exact series

    Instances are immutable. Terms at or beyond ``trunc`` are discarded
    on construction.
    """
    __slots__ = ('_coeffs', '_ram', '_trunc')

    def __init__(self, coeffs=None, ram=1, trunc=None):
        ram = int(ram)
        if ram < 1:
            raise ValueError("ramification index must be positive, got {}"
                             .format(ram))
        if trunc is not None:
            trunc = as_rational(trunc)
            if (trunc * ram).denominator != 1:
                raise ValueError("truncation {} is not in (1/{})Z"
                                 .format(trunc, ram))
        clean = {}
        for e, c in (coeffs or {}).items():
            e = as_rational(e)
            c = as_rational(c)
            if (e * ram).denominator != 1:
                raise ValueError("exponent {} is not in (1/{})Z".format(e, ram))
            if c != 0 and _lt(e, trunc):
                clean[e] = c
        self._coeffs = clean
        self._ram = ram
        self._trunc = trunc

    # construction helpers

    @classmethod
    def monomial(cls, exponent, coeff=1, ram=None, trunc=None):
        exponent = as_rational(exponent)
        if ram is None:
            ram = exponent.denominator
        return cls({exponent: coeff}, ram=ram, trunc=trunc)

    @classmethod
    def zero(cls, ram=1, trunc=None):
        return cls({}, ram=ram, trunc=trunc)

    @classmethod
    def one(cls, ram=1, trunc=None):
        return cls({0: 1}, ram=ram, trunc=trunc)

    @classmethod
    def from_quadruples(cls, quadruples, ram=1, trunc=None):
        """ build from ``[[e_num, e_den, c_num, c_den], ...]`` """
        return cls(
            {Fraction(en, ed): Fraction(cn, cd) for en, ed, cn, cd in quadruples},
            ram=ram,
            trunc=trunc,
        )

    # accessors

    @property
    def ram(self):
        return self._ram

    @property
    def trunc(self):
        return self._trunc

    @property
    def coeffs(self):
        return MappingProxyType(self._coeffs)

    @property
    def is_exact(self):
        return self._trunc is None

    @property
    def is_zero(self):
        """ True if no known term is nonzero (the series may still be unknown above trunc) """
        return not self._coeffs

    @property
    def order(self):
        """ lowest exponent with a known nonzero coefficient, None if there is none """
        if not self._coeffs:
            return None
        return min(self._coeffs)

    @property
    def leading_coefficient(self):
        if not self._coeffs:
            raise NotAUnit("series has no known term below {}".format(self._trunc))
        return self._coeffs[self.order]

    @property
    def degree(self):
        """ highest exponent with a nonzero coefficient """
        if not self._coeffs:
            return None
        return max(self._coeffs)

    def effective_order(self):
        """
        lower bound for the order: the order if a term is known, else the
        truncation (None for the exact zero series)
        """
        order = self.order
        return self._trunc if order is None else order

    def exponents(self):
        return sorted(self._coeffs)

    def items(self):
        return [(e, self._coeffs[e]) for e in self.exponents()]

    def coefficient(self, exponent):
        """
        coefficient of z^exponent; raises `InsufficientPrecision` if the
        exponent is at or beyond the truncation
        """
        exponent = as_rational(exponent)
        if not _lt(exponent, self._trunc):
            raise InsufficientPrecision(
                "coefficient of z^{} requested, series known below {}".format(
                    exponent, self._trunc))
        return self._coeffs.get(exponent, Fraction(0))

    __getitem__ = coefficient

    def is_known(self, exponent):
        return _lt(as_rational(exponent), self._trunc)

    # structural operations

    def truncate(self, bound):
        """ forget everything at or above `bound` (never raises the bound) """
        bound = as_rational(bound)
        if self._trunc is not None and self._trunc < bound:
            bound = self._trunc
        return TruncatedPuiseuxSeries(self._coeffs, self._ram, bound)

    def with_ram(self, ram):
        """ the same series viewed with a (multiple of the) ramification index """
        if ram % self._ram:
            raise ValueError("{} is not a multiple of {}".format(ram, self._ram))
        return TruncatedPuiseuxSeries(self._coeffs, ram, self._trunc)

    def map_terms(self, func):
        """ apply ``func(e, c) -> c'`` to every term """
        return TruncatedPuiseuxSeries(
            {e: func(e, c) for e, c in self._coeffs.items()},
            self._ram,
            self._trunc,
        )

    def restrict(self, predicate):
        """ keep the terms whose exponent satisfies `predicate` (truncation kept) """
        return TruncatedPuiseuxSeries(
            {e: c for e, c in self._coeffs.items() if predicate(e)},
            self._ram,
            self._trunc,
        )

    def shift(self, k):
        """ multiply by z^k """
        k = as_rational(k)
        ram = lcm(self._ram, k.denominator)
        return TruncatedPuiseuxSeries(
            {e + k: c for e, c in self._coeffs.items()},
            ram,
            _add_bound(self._trunc, k),
        )

    def scale(self, scalar):
        scalar = as_rational(scalar)
        return TruncatedPuiseuxSeries(
            {e: scalar * c for e, c in self._coeffs.items()},
            self._ram,
            self._trunc,
        )

    # arithmetic

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        if not isinstance(other, TruncatedPuiseuxSeries):
            other = TruncatedPuiseuxSeries({0: as_rational(other)}, self._ram)
        coeffs = dict(self._coeffs)
        for e, c in other._coeffs.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return TruncatedPuiseuxSeries(
            coeffs,
            lcm(self._ram, other._ram),
            _min_bound(self._trunc, other._trunc),
        )

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, TruncatedPuiseuxSeries):
            other = TruncatedPuiseuxSeries({0: as_rational(other)}, self._ram)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedPuiseuxSeries):
            return self.scale(other)

        ord_f = self.effective_order()
        ord_g = other.effective_order()
        if (ord_f is None and self.is_exact) or (ord_g is None and other.is_exact):
            # exact zero annihilates everything
            return TruncatedPuiseuxSeries.zero(lcm(self._ram, other._ram))

        trunc = _min_bound(_add_bound(self._trunc, ord_g),
                           _add_bound(other._trunc, ord_f))
        coeffs = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                if _lt(e, trunc):
                    coeffs[e] = coeffs.get(e, 0) + c1 * c2
        return TruncatedPuiseuxSeries(coeffs, lcm(self._ram, other._ram), trunc)

    __rmul__ = __mul__

    def inverse(self, trunc=None):
        """
        1/f, with truncation τ - 2·ord(f) (or `trunc` if that is tighter).

        An exact series needs an explicit `trunc` for its (infinite)
        inverse, unless it is a monomial.

        Raises
        ------
        NotAUnit
            if no term of f is known
        """
        if not self._coeffs:
            raise NotAUnit("cannot invert a series with no known term below {}"
                           .format(self._trunc))
        v = self.order
        lead = self._coeffs[v]
        if len(self._coeffs) == 1 and self.is_exact and trunc is None:
            return TruncatedPuiseuxSeries({-v: 1 / lead}, self._ram)

        bound = _min_bound(_add_bound(self._trunc, -2 * v),
                           None if trunc is None else as_rational(trunc))
        if bound is None:
            raise InsufficientPrecision(
                "the inverse of an exact series needs an explicit truncation")

        r = self._ram
        # u = f / (lead z^v) = 1 + Σ_{k≥1} u_k z^{k/r}
        n_steps = max(ceil((bound + v) * r), 0)
        u = {}
        for e, c in self._coeffs.items():
            k = (e - v) * r
            u[int(k)] = c / lead
        w = [Fraction(1)]
        for n in range(1, n_steps):
            acc = Fraction(0)
            for k, uk in u.items():
                if 0 < k <= n:
                    acc -= uk * w[n - k]
            w.append(acc)
        coeffs = {Fraction(n, r) - v: wn / lead
                  for n, wn in enumerate(w[:n_steps]) if wn}
        return TruncatedPuiseuxSeries(coeffs, r, bound)

    def __truediv__(self, other):
        if isinstance(other, TruncatedPuiseuxSeries):
            return self * other.inverse()
        return self.scale(1 / as_rational(other))

    def derivative(self):
        """ d/dz, termwise; the truncation drops by one """
        return TruncatedPuiseuxSeries(
            {e - 1: e * c for e, c in self._coeffs.items() if e != 0},
            self._ram,
            _add_bound(self._trunc, -1),
        )

    # comparison and display

    def agrees_with(self, other, bound=None):
        """
        True if both series have identical coefficients below `bound`
        (default: the smaller truncation)
        """
        if bound is None:
            bound = _min_bound(self._trunc, other._trunc)
        exps = set(self._coeffs) | set(other._coeffs)
        return all(
            self._coeffs.get(e, 0) == other._coeffs.get(e, 0)
            for e in exps if _lt(e, bound)
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedPuiseuxSeries):
            return NotImplemented
        return self._coeffs == other._coeffs and self._trunc == other._trunc

    def __hash__(self):
        return hash((frozenset(self._coeffs.items()), self._trunc))

    def to_quadruples(self):
        return [[e.numerator, e.denominator, c.numerator, c.denominator]
                for e, c in self.items()]

    def __str__(self):
        terms = []
        for e, c in self.items():
            if e == 0:
                terms.append(format_rational(c))
            else:
                terms.append("{}*z^{}".format(format_rational(c),
                                              format_rational(e)))
        text = " + ".join(terms) if terms else "0"
        if self._trunc is not None:
            text += " + O(z^{})".format(format_rational(self._trunc))
        return text

    def __repr__(self):
        return "TruncatedPuiseuxSeries({})".format(self)


def series_arith(op, f, g=None, trunc=None):
    """
    add, mul or inv on truncated series.

    Parameters
    ----------
    op: str
        one of 'add', 'mul', 'inv'
    f, g: TruncatedPuiseuxSeries
        operands (g is not used by 'inv')
    trunc: rational
        explicit truncation for 'inv' of an exact series

    Returns
    -------
    TruncatedPuiseuxSeries
    """
    if op == 'add':
        return f + g
    if op == 'mul':
        return f * g
    if op == 'inv':
        return f.inverse(trunc=trunc)
    raise ValueError("unknown series operation '{}'".format(op))


def series_derive(f):
    return f.derivative()
