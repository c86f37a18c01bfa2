"""
Truncated realization of the extension by zero of a rank-one connection.

An element g·e of the realized module is stored as the series g; the
connection acts by ∂(g e) = (g' + (f + residue/z) g) e. On this space ∂ is
invertible whenever the connection has no horizontal section, and the
operators

    ζ  = -∂⁻¹        ∂ζ = -∂·∂·z

define the structure of the Fourier transform.

For f = 0 with an integral residue the module has a horizontal section.
The *extended* realization then gauges the residue to 0 and uses the basis
{z^k, k ≥ 0} ∪ {∂^j(1), j ≥ 1}; the class ∂^j(1) is stored at exponent -j.
"""
import logging
from fractions import Fraction

from ..core.errors import InsufficientPrecision, InvalidInput, Resonance
from ..exact import TruncatedPuiseuxSeries, as_rational, format_rational, lcm

log = logging.getLogger(__name__)

__all__ = [
    'Realization',
    'solve_derivation',
    'zeta_action',
    'dzeta_action',
]


class Realization:
    """
    Parameters
    ----------
    f: TruncatedPuiseuxSeries or dict
        exponential part; its z^-1 coefficient is moved into the residue,
        terms with exponent > -1 are refused
    residue: rational
        Kummer exponent
    window: int
        default truncation used when an exact input has an infinite image
    extended: bool
        use the two-sided basis of the integral-residue regular case
    """

    def __init__(self, f=None, residue=0, window=40, extended=False):
        if f is None:
            f = TruncatedPuiseuxSeries.zero()
        if not isinstance(f, TruncatedPuiseuxSeries):
            f = TruncatedPuiseuxSeries(f)
        residue = as_rational(residue) + f.coefficient(-1)
        if any(e > -1 for e in f.exponents()):
            raise InvalidInput(
                "exponential part must only contain exponents < -1, got {}"
                .format(f))
        polar = TruncatedPuiseuxSeries(
            {e: c for e, c in f.items() if e < -1}, ram=f.ram)

        self.window = int(window)
        self.extended = bool(extended)
        self.f = polar
        self.gauge = Fraction(0)
        if self.extended:
            if not polar.is_zero or residue.denominator != 1 or polar.ram != 1:
                raise InvalidInput(
                    "the extended basis needs f = 0 and an integral residue")
            self.gauge = residue
            residue = Fraction(0)
        self.residue = residue

    @property
    def ram(self):
        return self.f.ram

    @property
    def is_regular(self):
        return self.f.is_zero

    @property
    def order_shift(self):
        """ exact z-order gained by ∂⁻¹ (p for a pole of order p, else 1) """
        if self.f.is_zero:
            return 1
        return -self.f.order

    @property
    def slope(self):
        return Fraction(self.order_shift - 1)

    @property
    def is_resonant(self):
        return (self.f.is_zero and not self.extended
                and self.residue.denominator == 1)

    def with_window(self, window):
        return Realization(self.f, self.residue + self.gauge, window=window,
                           extended=self.extended)

    def one(self):
        return TruncatedPuiseuxSeries.one(ram=self.ram)

    def lattice_generators(self):
        """
        z^(j/r) for 0 ≤ j < p·r: a basis of k[[z]] over k[[ζ]]
        """
        if self.extended:
            return [self.one()]
        count = int(self.order_shift * self.ram)
        return [TruncatedPuiseuxSeries({Fraction(j, self.ram): 1}, ram=self.ram)
                for j in range(count)]

    def __repr__(self):
        return "Realization(f={}, residue={}, window={}{})".format(
            self.f, format_rational(self.residue), self.window,
            ", extended" if self.extended else "")

    # the D-module structure

    def derivation(self, v):
        """ ∂·v """
        if self.extended:
            return _extended_map(
                v, lambda e, c: (e - 1, e * c if e > 0 else c), shift=-1)
        return v.derivative() + self.f * v + v.shift(-1).scale(self.residue)

    def multiply_z(self, v):
        """ z·v; in the extended basis z·∂^j(1) = (1-j)·∂^(j-1)(1) """
        if self.extended:
            return _extended_map(
                v, lambda e, c: (e + 1, (1 + e) * c if e < 0 else c), shift=1)
        return v.shift(1)

    def solve_derivation(self, w, trunc=None):
        """
        The unique v with ∂·v = w.

        Parameters
        ----------
        w: TruncatedPuiseuxSeries
        trunc: rational or None
            requested precision of v; by default everything `w` determines
            (the window for an exact `w` with an infinite preimage)

        Raises
        ------
        Resonance
            if the connection has a horizontal section outside the
            extended basis
        InsufficientPrecision
            if `w` does not determine v below `trunc`
        """
        if self.extended:
            result = _extended_map(
                w, lambda e, c: (e + 1, c / (e + 1) if e >= 0 else c), shift=1)
        elif self.is_regular:
            result = self._solve_regular(w)
        else:
            achievable = None if w.trunc is None else w.trunc + self.order_shift
            if trunc is None:
                target = self.window if achievable is None else achievable
            else:
                target = as_rational(trunc)
            if achievable is not None and target > achievable:
                raise InsufficientPrecision(
                    "∂⁻¹ is determined below z^{} only, z^{} requested".format(
                        format_rational(achievable), format_rational(target)))
            return self._solve_irregular(w, target)

        if trunc is not None:
            trunc = as_rational(trunc)
            if result.trunc is not None and result.trunc < trunc:
                raise InsufficientPrecision(
                    "∂⁻¹ is determined below z^{} only, z^{} requested".format(
                        format_rational(result.trunc), format_rational(trunc)))
            result = result.truncate(trunc)
        return result

    def _solve_regular(self, w):
        if self.is_resonant:
            raise Resonance("residue {} is integral: 1 is horizontal".format(
                format_rational(self.residue)))
        coeffs = {}
        for e, c in w.items():
            denominator = e + 1 + self.residue
            if denominator == 0:
                raise Resonance("z^{} is horizontal".format(
                    format_rational(e + 1)))
            coeffs[e + 1] = c / denominator
        return TruncatedPuiseuxSeries(
            coeffs, ram=lcm(self.ram, w.ram),
            trunc=None if w.trunc is None else w.trunc + 1)

    def _solve_irregular(self, w, target):
        """
        Fixed point of v ← f_lead⁻¹(w - v' - (tail + residue/z)·v),
        computed one coefficient at a time: the coefficient of z^m in ∂·v
        determines that of z^(m+p) in v.
        """
        p = self.order_shift
        lead = self.f.coefficient(-p)
        tail = [(i, c) for i, c in self.f.items() if i != -p]
        ram = lcm(self.ram, w.ram)
        if w.order is None:
            return TruncatedPuiseuxSeries.zero(ram=ram, trunc=target)

        step = Fraction(1, ram)
        v = {}
        e = w.order + p
        while e < target:
            m = e - p
            acc = w.coeffs.get(m, 0) - (m + 1 + self.residue) * v.get(m + 1, 0)
            for i, c in tail:
                acc -= c * v.get(m - i, 0)
            if acc:
                v[e] = acc / lead
            e += step
        return TruncatedPuiseuxSeries(v, ram=ram, trunc=target)

    # Fourier side

    def zeta_action(self, v, trunc=None):
        """ ζ·v = -∂⁻¹v """
        return -self.solve_derivation(v, trunc)

    def zeta_inverse(self, v):
        """ ζ⁻¹·v = -∂v """
        return -self.derivation(v)

    def dzeta_action(self, v):
        """ ∂ζ·v = -∂(∂(z·v)) """
        return -self.derivation(self.derivation(self.multiply_z(v)))


def _extended_map(v, term, shift):
    coeffs = {}
    for e, c in v.items():
        if e.denominator != 1:
            raise InvalidInput("the extended basis has integral exponents only")
        target, value = term(e, c)
        coeffs[target] = coeffs.get(target, 0) + value
    return TruncatedPuiseuxSeries(
        coeffs, trunc=None if v.trunc is None else v.trunc + shift)


def solve_derivation(real, w, trunc=None):
    return real.solve_derivation(w, trunc)


def zeta_action(real, v, trunc=None):
    return real.zeta_action(v, trunc)


def dzeta_action(real, v):
    return real.dzeta_action(v)
