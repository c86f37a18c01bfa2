"""
Contraction and expansion of operators on a realized module, judged by
the z-order of iterates of the lattice generators.
"""
from fractions import Fraction

from ..core import Component
from ..core.errors import DModError, InsufficientPrecision
from ..core.traits import Int
from ..exact import TruncatedPuiseuxSeries, as_rational, format_rational
from ..io.containers import CONTRACTING, EXPANDING, INCONCLUSIVE, GrowthVerdict

__all__ = [
    'GrowthOperator',
    'GrowthClassifier',
    'classify_growth',
]

MAX_FIXED_POINT_ROUNDS = 200


class GrowthOperator:
    """
    One of the operators z^a·∂, p(∂) or p(z) acting on a `Realization`.

    Use the constructors `z_power_derivation`, `derivation_polynomial` and
    `multiplication` instead of calling the class directly.
    """
    __slots__ = ('kind', 'power', 'coefficients')

    Z_POWER_DERIVATION = 'z^a d'
    DERIVATION_POLYNOMIAL = 'p(d)'
    MULTIPLICATION = 'p(z)'

    def __init__(self, kind, power=0, coefficients=None):
        self.kind = kind
        self.power = as_rational(power)
        self.coefficients = coefficients

    @classmethod
    def z_power_derivation(cls, a):
        """ z^a·∂ """
        return cls(cls.Z_POWER_DERIVATION, power=a)

    @classmethod
    def derivation_polynomial(cls, coefficients):
        """ Σ c_j ∂^j from the list c_0, ..., c_d """
        coefficients = [as_rational(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if not coefficients:
            raise ValueError("the zero polynomial is not a growth operator")
        return cls(cls.DERIVATION_POLYNOMIAL, coefficients=coefficients)

    @classmethod
    def multiplication(cls, polynomial):
        """ multiplication by a Laurent polynomial {exponent: coefficient} """
        series = TruncatedPuiseuxSeries(polynomial)
        if series.is_zero:
            raise ValueError("multiplication by zero is not a growth operator")
        return cls(cls.MULTIPLICATION, coefficients=series)

    def __repr__(self):
        if self.kind == self.Z_POWER_DERIVATION:
            return "z^{}·∂".format(format_rational(self.power))
        if self.kind == self.DERIVATION_POLYNOMIAL:
            return " + ".join(
                "{}·∂^{}".format(format_rational(c), j)
                for j, c in enumerate(self.coefficients) if c)
        return "({})·".format(self.coefficients)

    def apply(self, real, v):
        if self.kind == self.Z_POWER_DERIVATION:
            return real.derivation(v).shift(self.power)
        if self.kind == self.DERIVATION_POLYNOMIAL:
            result = v.scale(self.coefficients[0])
            power = v
            for c in self.coefficients[1:]:
                power = real.derivation(power)
                result = result + power.scale(c)
            return result
        return self.coefficients * v

    def apply_inverse(self, real, v):
        """
        Raises
        ------
        Resonance
            if ∂ is not invertible on `real`
        """
        if self.kind == self.Z_POWER_DERIVATION:
            return real.solve_derivation(v.shift(-self.power))
        if self.kind == self.DERIVATION_POLYNOMIAL:
            return self._invert_polynomial(real, v)
        return self.coefficients.inverse(trunc=real.window) * v

    def _invert_polynomial(self, real, w):
        """
        Fixed point of u ← c_d⁻¹·∂⁻ᵈ(w - Σ_(j<d) c_j ∂^j u); each round
        gains the order that ∂⁻¹ adds.
        """
        *lower, top = self.coefficients
        d = len(lower)
        if d == 0:
            return w.scale(1 / top)

        def step(u):
            rhs = w
            power = u
            for j, c in enumerate(lower):
                if j > 0:
                    power = real.derivation(power)
                if c:
                    rhs = rhs - power.scale(c)
            for _ in range(d):
                rhs = real.solve_derivation(rhs)
            return rhs.scale(1 / top)

        u = step(TruncatedPuiseuxSeries.zero())
        bound = real.window if u.trunc is None else u.trunc
        u = u.truncate(bound)
        for _ in range(MAX_FIXED_POINT_ROUNDS):
            following = step(u).truncate(bound)
            if following.trunc == u.trunc and following.agrees_with(u):
                return following
            u = following
        raise InsufficientPrecision(
            "inverse of {} did not stabilize within {} rounds".format(
                self, MAX_FIXED_POINT_ROUNDS))


class GrowthClassifier(Component):
    """
    Applies an operator and its inverse repeatedly to the lattice
    generators of a realization. The operator is reported contracting when
    every generator's order strictly increases along the iterates,
    expanding when every order strictly decreases and the inverse
    contracts, and inconclusive otherwise.
    """
    iterations = Int(4, help='number of applications per generator').tag(config=True)
    generators = Int(4, help='maximal number of lattice generators tested').tag(config=True)

    def classify(self, operator, real):
        """
        Parameters
        ----------
        operator: GrowthOperator
        real: Realization

        Returns
        -------
        GrowthVerdict
        """
        vectors = real.lattice_generators()[:self.generators]
        witness = [self._orbit(operator.apply, real, v) for v in vectors]
        report = GrowthVerdict(operator=repr(operator), witness=witness,
                               precision=real.window)

        if all(_strictly_increasing(orders) for orders in witness):
            report.verdict = CONTRACTING
        elif all(_strictly_decreasing(orders) for orders in witness):
            try:
                inverse = [self._orbit(operator.apply_inverse, real, v)
                           for v in vectors]
            except DModError as err:
                self.log.warning("%s has no usable inverse: %s", operator, err)
                inverse = None
            report.inverse_witness = inverse or []
            if inverse and all(_strictly_increasing(o) for o in inverse):
                report.verdict = EXPANDING

        if report.verdict == INCONCLUSIVE:
            self.log.warning("growth of %s on %s is inconclusive", operator, real)
        else:
            self.log.debug("%s is %s on %s, orders %s",
                           operator, report.verdict, real, witness)
        return report

    def _orbit(self, func, real, v):
        """ orders of v, Q v, ..., Q^n v; stops at the first undetermined iterate """
        orders = [v.order]
        for _ in range(self.iterations):
            v = func(real, v)
            if v.order is None:
                break
            orders.append(v.order)
        return [Fraction(o) for o in orders if o is not None]


def _strictly_increasing(orders):
    return len(orders) > 1 and all(a < b for a, b in zip(orders, orders[1:]))


def _strictly_decreasing(orders):
    return len(orders) > 1 and all(a > b for a, b in zip(orders, orders[1:]))


def classify_growth(operator, real, iterations=4, trunc=None):
    """
    Classify `operator` on `real` with a default `GrowthClassifier`.

    `trunc` replaces the window of the realization when given.
    """
    if trunc is not None:
        real = real.with_window(trunc)
    return GrowthClassifier(iterations=iterations).classify(operator, real)
