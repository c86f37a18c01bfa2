"""
The local Fourier oracle: realizes a rank-one connection at 0, lets ζ and
∂ζ act on it and reads the transform off an annihilating operator of the
generator.

Example:

.. code-block:: python

    >>> oracle = LocalFourierOracle(truncation=40)
    >>> report = oracle.local_fourier_invariants(residue=Fraction(1, 3))
    >>> report.rank_out, report.residue_out
    (1, Fraction(4, 3))
"""
from fractions import Fraction

from ..core import Component
from ..core.errors import (InsufficientPrecision, NoRelationFound,
                           UnsupportedRamification)
from ..core.traits import Int
from ..exact import TruncatedPuiseuxSeries, as_rational, format_rational
from ..formal import DifferentialOperator, newton_slopes
from ..io.containers import LocalFourierContainer, TopologyContainer
from ..utils.linalg import as_matrix, matrix_entries, nullspace
from .realization import Realization

__all__ = [
    'LocalFourierOracle',
    'annihilator',
    'local_fourier_invariants',
    'fourier_relation',
    'topology_compare',
]


def _split_connection(f, residue):
    """ polar part (exponents < -1) and the residue absorbing the z^-1 term """
    if f is None:
        f = TruncatedPuiseuxSeries.zero()
    if not isinstance(f, TruncatedPuiseuxSeries):
        f = TruncatedPuiseuxSeries(f)
    residue = as_rational(residue) + f.coefficient(-1)
    polar = f.restrict(lambda e: e < -1)
    return polar, residue


class LocalFourierOracle(Component):
    """
    Computes Four(0,∞) of rank-one connections from first principles.
    """
    truncation = Int(40, help='exponent window of the realization').tag(config=True)
    max_order = Int(6, help='largest operator order searched').tag(config=True)
    row_margin = Int(
        4, help='equations required beyond the number of unknowns'
    ).tag(config=True)

    def realize(self, f=None, residue=0):
        """
        Realization of the connection d/dz + f + residue/z; the extended
        basis is chosen automatically for f = 0 with an integral residue.
        """
        polar, residue = _split_connection(f, residue)
        extended = polar.is_zero and residue.denominator == 1
        if extended:
            self.log.debug("integral residue %s: using the extended basis",
                           format_rational(residue))
        return Realization(polar, residue, window=self.truncation,
                           extended=extended)

    def annihilator(self, real, generator=None):
        """
        Minimal-order relation Σ a_j(ζ) ∂ζ^j g = 0 with polynomial a_j,
        normalized by the lowest term of the leading coefficient.

        Raises
        ------
        UnsupportedRamification
            for a ramified realization
        InsufficientPrecision
            if some candidate system has too few determined equations and
            no relation was found among the others
        NoRelationFound
            if there is no relation up to `max_order`
        """
        if real.ram != 1:
            raise UnsupportedRamification(
                "the oracle handles unramified connections only")
        if generator is None:
            generator = real.one()
        window = Fraction(self.truncation)

        derivatives = [generator]
        for _ in range(self.max_order):
            derivatives.append(real.dzeta_action(derivatives[-1]))

        # rows[j][k] = ζ^k ∂ζ^j g, extended lazily
        rows = [[d.truncate(window)] for d in derivatives]
        short = False
        for n in range(self.max_order + 1):
            for width in range(2 * n + 1):
                for j in range(n + 1):
                    while len(rows[j]) <= width:
                        rows[j].append(real.zeta_action(rows[j][-1]).truncate(window))

                vectors = [rows[j][k] for j in range(n + 1)
                           for k in range(width + 1)]
                if any(v.order is None or (v.trunc is not None and v.trunc < window)
                       for v in vectors):
                    short = True
                    continue
                lowest = min((v.order for v in vectors if v.order is not None),
                             default=window)
                exponents = range(int(lowest), int(window))
                if len(exponents) < len(vectors) + self.row_margin:
                    short = True
                    continue

                matrix = as_matrix([[v.coefficient(e) for v in vectors]
                                    for e in exponents])
                kernel = nullspace(matrix)
                if not kernel:
                    continue
                if len(kernel) > 1:
                    self.log.debug("%d independent relations at order %d, "
                                   "width %d; taking the first",
                                   len(kernel), n, width)
                solution = [row[0] for row in matrix_entries(kernel[0])]
                coefficients = []
                for j in range(n + 1):
                    coefficients.append(TruncatedPuiseuxSeries({
                        k: solution[j * (width + 1) + k]
                        for k in range(width + 1)
                    }))
                operator = DifferentialOperator(coefficients).normalized()
                self.log.debug("annihilator %s from %d equations below z^%s",
                               operator, len(exponents), window)
                return operator

        if short:
            raise InsufficientPrecision(
                "truncation {} leaves too few equations for an operator "
                "of order <= {}".format(self.truncation, self.max_order))
        raise NoRelationFound(
            "no annihilating operator of order <= {}".format(self.max_order))

    def local_fourier_invariants(self, f=None, residue=0):
        """
        Rank, slopes and (for a regular rank-one output) the residue of
        Four(0,∞) of d/dz + f + residue/z.

        Returns
        -------
        LocalFourierContainer
        """
        real = self.realize(f, residue)
        operator = self.annihilator(real)
        slopes, _ = newton_slopes(operator)

        report = LocalFourierContainer(
            rank_out=operator.order,
            slopes_out=sorted([s, m] for s, m in slopes.items()),
            operator=operator,
            order=operator.order,
            precision=self.truncation,
            mode='oracle',
        )
        expected = 1 + real.slope
        if operator.order != expected:
            self.log.warning("annihilator of order %d, expected rank %s",
                             operator.order, format_rational(expected))
        if operator.order == 1 and set(slopes) <= {Fraction(0)}:
            a0, a1 = operator.coefficients
            ratio = a0 * a1.inverse(trunc=1)
            report.residue_out = -ratio.coefficient(-1)
        return report

    def topology_compare(self, real, n):
        """
        Compares the z-adic and ζ-adic filtrations on the lattice L
        spanned over k[[ζ]] by the lattice generators.

        Returns
        -------
        TopologyContainer
            `forward`: least m with ζ^m L ⊂ z^(o+n) k[[z]]; `backward`:
            largest m with z^(o'+n) k[[z]] ⊂ ζ^m L

        Raises
        ------
        InsufficientPrecision
            if the window ends before either bound is reached
        """
        n = as_rational(n)
        window = Fraction(self.truncation)
        real = real.with_window(self.truncation)
        generators = real.lattice_generators()
        lowest = min(g.order for g in generators)
        # ζ raises the order of each generator exactly, so L = z^o k[[z]]
        conductor = lowest
        if lowest + n >= window:
            raise InsufficientPrecision(
                "depth {} exceeds the window {}".format(
                    format_rational(n), self.truncation))

        forward = 0
        current = generators
        while min(v.order for v in current) < lowest + n:
            current = [real.zeta_action(v) for v in current]
            forward += 1
            if any(v.order is None for v in current):
                raise InsufficientPrecision(
                    "ζ^{} of a lattice generator is not determined below "
                    "z^{}".format(forward, self.truncation))

        step = Fraction(1, real.ram)
        span = real.order_shift * 2
        backward = None
        e = conductor + n
        while e < min(window, conductor + n + span):
            backward = _min_opt(backward, self._zeta_valuation(real, e, conductor))
            e += step

        report = TopologyContainer(
            n=n, forward=forward, backward=backward, lattice_order=lowest,
            lattice_conductor=conductor, precision=self.truncation)
        self.log.debug("topology comparison at depth %s: %s",
                       format_rational(n), report)
        return report

    def _zeta_valuation(self, real, e, conductor):
        """ largest k with ζ^(-k) z^e = (-∂)^k z^e still in z^conductor k[[z]] """
        v = TruncatedPuiseuxSeries({e: 1}, ram=real.ram)
        k = 0
        while True:
            v = real.derivation(v)
            if v.order is None or v.order < conductor:
                return k
            k += 1


def _min_opt(current, value):
    return value if current is None else min(current, value)


def annihilator(real, generator=None, max_order=6, trunc=40):
    oracle = LocalFourierOracle(max_order=max_order, truncation=trunc)
    return oracle.annihilator(real.with_window(trunc), generator)


def local_fourier_invariants(f=None, residue=0, trunc=40):
    return LocalFourierOracle(truncation=trunc).local_fourier_invariants(
        f, residue)


def topology_compare(real, n, trunc=40):
    return LocalFourierOracle(truncation=trunc).topology_compare(real, n)


def fourier_relation(f=None, residue=0):
    """
    The relation of the generator after Fourier transform, in closed form.

    The generator e satisfies z^p(∂ - f - residue/z)·e = 0 with polynomial
    coefficients in z; substituting z = -ζ²∂ζ and ∂ = -ζ⁻¹ gives an
    operator in ζ, ∂ζ killing the transformed generator.
    """
    polar, residue = _split_connection(f, residue)
    if polar.ram != 1:
        raise UnsupportedRamification(
            "closed-form relation needs an unramified connection")
    p = 1 if polar.is_zero else int(-polar.order)

    z_op = DifferentialOperator([0, {2: -1}])
    d_op = DifferentialOperator([{-1: -1}])
    z_powers = [DifferentialOperator([1])]
    for _ in range(p):
        z_powers.append(z_powers[-1] * z_op)

    relation = z_powers[p] * d_op
    for i, c in polar.items():
        relation = relation - z_powers[p + int(i)].scale(c)
    if residue:
        relation = relation - z_powers[p - 1].scale(residue)
    return relation.normalized()
