"""
Local Fourier transforms on the classification level.

Regular components are transformed exactly (a Kummer module K^α at a
finite point x goes to ℓ_x ⊗ K^(α+1) at infinity). Irregular components
only get their invariants: rank, irregularity and the slope multiset,
following the slope maps s ↦ s/(1+s) for (x,∞), s ↦ s/(s-1) for (∞,∞)
and the inverse of the first one for (∞,x).

The flavors are `Component` classes, so a tool picks one through
`FourierFlavorFactory`:

.. code-block:: python

    >>> flavor = FourierFlavorFactory.produce(product='0-infty')
    >>> flavor.transform(FormalModule([kummer(Fraction(1, 2))])).module
    FormalModule(E(residue=1/2))
"""
from abc import abstractmethod
from collections import Counter
from fractions import Fraction

from ..core import Component, Factory
from ..core.errors import InvalidRamifiedData, UseBookkeeping, WrongSlopeSector
from ..core.traits import Bool, Int, Rational
from ..exact import TruncatedPuiseuxSeries, as_rational, format_rational
from ..formal import ElementaryModule, FormalModule, kummer
from ..io.containers import TransformBookkeeping, TransformContainer
from .decomposition import infinity_decompose, twist_class, untwist_class

__all__ = [
    'ZERO_INFINITY',
    'INFINITY_ZERO',
    'INFINITY_INFINITY',
    'fourier_local_regular',
    'fourier_local_regular_inverse',
    'fourier_bookkeeping',
    'representative_module',
    'FourierFlavor',
    'FourierZeroInfinity',
    'FourierInfinityZero',
    'FourierInfinityInfinity',
    'FourierFlavorFactory',
]

ZERO_INFINITY = '0-infty'
INFINITY_ZERO = 'infty-0'
INFINITY_INFINITY = 'infty-infty'
INFINITY_LABEL = 'infty'

DERIVED_UNIPOTENT_NOTE = ("derived rule: K^a ⊗ U_m -> K^(a+1) ⊗ U_m "
                          "for unipotent blocks of size m > 1")
IRREGULAR_NOTE = ("irregular components are determined up to a natural "
                  "isomorphism; only their invariants are reported")


def fourier_local_regular(module, x=0):
    """
    Four(x,∞) of a regular module: K^α ⊗ U_m ↦ ℓ_x ⊗ K^(α+1) ⊗ U_m.

    Raises
    ------
    UseBookkeeping
        if a component is irregular
    """
    x = as_rational(x)
    components = []
    for c in module:
        if not c.is_regular:
            raise UseBookkeeping(
                "{!r} is irregular, only bookkeeping is available".format(c))
        out = c.replace(residue=c.residue + 1)
        components.append(twist_class(out, x))
    return FormalModule(components)


def fourier_local_regular_inverse(module, x=0):
    """
    Four(∞,x) on class-x modules that become regular after untwisting ℓ_x.

    Raises
    ------
    UseBookkeeping
        if a component is not regular after untwisting
    """
    x = as_rational(x)
    components = []
    for c in module:
        c = untwist_class(c, x)
        if not c.is_regular:
            raise UseBookkeeping(
                "{!r} is irregular after untwisting by ℓ_{}".format(
                    c, format_rational(x)))
        components.append(c.replace(residue=c.residue - 1))
    return FormalModule(components)


def _multiplicity(value, slope):
    if value.denominator != 1:
        raise InvalidRamifiedData(
            "slope {} carries the non-integral multiplicity {}".format(
                format_rational(slope), format_rational(value)))
    return int(value)


def _bookkeeping(flavor, slopes, class_label):
    slopes = +slopes
    return TransformBookkeeping(
        flavor=flavor,
        rank_out=sum(slopes.values()),
        irr_out=sum((s * m for s, m in slopes.items()), Fraction(0)),
        slopes_out=slopes,
        class_label=class_label,
    )


def _single_class(module, x):
    """ the class label of an (∞,x) input, checking the slope sector """
    decomposition = infinity_decompose(module)
    if len(decomposition.over1):
        raise WrongSlopeSector(
            "components of slope > 1 have no (∞,x) transform")
    labels = list(decomposition.classes)
    if len(labels) > 1:
        raise WrongSlopeSector("input mixes the classes {}".format(
            ", ".join(format_rational(v) for v in labels)))
    if x is None:
        return labels[0] if labels else Fraction(0)
    x = as_rational(x)
    if labels and labels[0] != x:
        raise WrongSlopeSector("input is of class {}, not {}".format(
            format_rational(labels[0]), format_rational(x)))
    return x


def fourier_bookkeeping(module, flavor, x=None):
    """
    Rank, irregularity and slopes of a local Fourier transform.

    Parameters
    ----------
    module: FormalModule
        at x for '0-infty', at ∞ otherwise
    flavor: str
        '0-infty', 'infty-0' or 'infty-infty'
    x: rational or None
        the finite point; for 'infty-0' the class is read off the input
        when not given

    Returns
    -------
    TransformBookkeeping

    Raises
    ------
    WrongSlopeSector
        if the input violates the slope condition of the flavor
    """
    slopes = Counter()
    if flavor == ZERO_INFINITY:
        label = as_rational(x or 0)
        for c in module:
            s = c.slope
            slopes[s / (1 + s)] += _multiplicity(c.rank * (1 + s), s)

    elif flavor == INFINITY_INFINITY:
        label = INFINITY_LABEL
        for c in module:
            s = c.slope
            if s <= 1:
                raise WrongSlopeSector(
                    "(∞,∞) needs slopes > 1, got {}".format(format_rational(s)))
            slopes[s / (s - 1)] += _multiplicity(c.rank * (s - 1), s)

    elif flavor == INFINITY_ZERO:
        label = _single_class(module, x)
        for c in module:
            t = untwist_class(c, label).slope
            slopes[t / (1 - t)] += _multiplicity(c.rank * (1 - t), t)

    else:
        raise ValueError("unknown transform flavor {!r}".format(flavor))

    return _bookkeeping(flavor, slopes, label)


def representative_module(bookkeeping):
    """
    A formal module with the invariants of a bookkeeping record: slope
    p/q with multiplicity m becomes m/q components E(r=q, z^(-p/q-1)),
    twisted by ℓ_x for a nonzero class x.

    Raises
    ------
    InvalidRamifiedData
        if a multiplicity is not divisible by the slope denominator
    """
    x = bookkeeping.class_label
    twist = x if x not in (None, INFINITY_LABEL) else 0
    components = []
    for t, mult in sorted(Counter(bookkeeping.slopes_out).items()):
        t = as_rational(t)
        q = t.denominator
        if mult % q:
            raise InvalidRamifiedData(
                "slope {} cannot carry multiplicity {}".format(
                    format_rational(t), mult))
        if t == 0:
            block = kummer(0)
        else:
            block = ElementaryModule(
                TruncatedPuiseuxSeries({-(t + 1): 1}, ram=q), r=q)
        components.extend([twist_class(block, twist)] * (mult // q))
    return FormalModule(components)


class FourierFlavor(Component):
    """
    Base class of the local Fourier transforms; subclasses fix the pair
    of points.
    """
    point = Rational(Fraction(0), help='the finite point x').tag(config=True)
    use_oracle = Bool(
        False, help='run the realization oracle on rank one inputs'
    ).tag(config=True)
    truncation = Int(40, help='window of the oracle').tag(config=True)

    flavor = None

    def bookkeeping(self, module):
        return fourier_bookkeeping(module, self.flavor, self.point)

    @abstractmethod
    def exact(self, module):
        """ the exact transform; raises UseBookkeeping where there is none """

    def transform(self, module):
        """
        Transform `module` exactly where possible, else report invariants.

        Returns
        -------
        TransformContainer
        """
        bk = self.bookkeeping(module)
        report = TransformContainer(
            rank=bk.rank_out,
            slopes=bk.slopes_out,
            class_label=bk.class_label,
        )
        try:
            report.module = self.exact(module)
            report.mode = 'exact'
            if any(c.unip > 1 for c in module):
                report.notes.append(DERIVED_UNIPOTENT_NOTE)
            return report
        except UseBookkeeping as err:
            self.log.debug("no exact rule: %s", err)

        if self.use_oracle and self._oracle_applies(module):
            return self._oracle_report(module, report)

        report.mode = 'bookkeeping'
        report.notes.append(IRREGULAR_NOTE)
        return report

    def _oracle_applies(self, module):
        return False

    def _oracle_report(self, module, report):
        return report


class FourierZeroInfinity(FourierFlavor):
    """ Four(x,∞): modules at a finite point x to modules at infinity """
    flavor = ZERO_INFINITY

    def exact(self, module):
        return fourier_local_regular(module, self.point)

    def _oracle_applies(self, module):
        return len(module) == 1 and module.rank == 1

    def _oracle_report(self, module, report):
        from ..tate import LocalFourierOracle

        (c,) = module
        oracle = LocalFourierOracle(parent=self, truncation=self.truncation)
        result = oracle.local_fourier_invariants(c.f, c.residue)
        slopes = Counter({s: m for s, m in result.slopes_out})
        if slopes != report.slopes:
            self.log.warning("oracle slopes %s differ from the bookkeeping %s",
                             dict(slopes), dict(report.slopes))
        report.mode = 'oracle'
        report.rank = result.rank_out
        report.slopes = slopes
        report.precision = result.precision
        report.notes.append(IRREGULAR_NOTE)
        return report


class FourierInfinityZero(FourierFlavor):
    """ Four(∞,x): class-x modules at infinity to modules at x """
    flavor = INFINITY_ZERO

    def exact(self, module):
        x = _single_class(module, self.point)
        return fourier_local_regular_inverse(module, x)


class FourierInfinityInfinity(FourierFlavor):
    """ Four(∞,∞): slopes > 1 at infinity, bookkeeping only """
    flavor = INFINITY_INFINITY

    def exact(self, module):
        raise UseBookkeeping("Four(∞,∞) has no exact rule")


class FourierFlavorFactory(Factory):
    """
    Produces a `FourierFlavor` from its class name or from one of the
    short names '0-infty', 'infty-0' and 'infty-infty'.
    """
    base = FourierFlavor
    default = ZERO_INFINITY
    product_aliases = {
        ZERO_INFINITY: 'FourierZeroInfinity',
        INFINITY_ZERO: 'FourierInfinityZero',
        INFINITY_INFINITY: 'FourierInfinityInfinity',
    }
    custom_product_help = 'Local Fourier transform flavor.'
