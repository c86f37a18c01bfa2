"""
Formal modules: finite direct sums of elementary modules, with the
invariants and functors used on the classification level.
"""
from collections import Counter
from fractions import Fraction

from ..core.errors import InconsistentRank, InvalidRamifiedData, UnsupportedRamification
from ..exact import as_rational
from .elementary import ElementaryModule
from .unipotent import clebsch_gordan

__all__ = [
    'FormalModule',
    'canonicalize',
    'slope',
    'rank',
    'irregularity',
    'slope_part',
    'tensor_kummer',
    'dual',
    'end_of',
    'hor_rank',
    'phi_mid_rank',
    'psi_to_phi',
    'phi_to_psi',
    'is_isomorphic',
]


class FormalModule:
    """
    A multiset of canonical `ElementaryModule` components.

    Component order is irrelevant: components are kept sorted, so two
    modules compare equal exactly when their canonical multisets agree.
    """
    __slots__ = ('components',)

    def __init__(self, components=()):
        self.components = tuple(sorted(
            c if isinstance(c, ElementaryModule) else ElementaryModule(**c)
            for c in components
        ))

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __add__(self, other):
        """ direct sum """
        return FormalModule(self.components + tuple(other))

    def __eq__(self, other):
        if not isinstance(other, FormalModule):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        if not self.components:
            return "FormalModule(0)"
        return "FormalModule({})".format(" ⊕ ".join(repr(c) for c in self))

    @property
    def rank(self):
        return sum(c.rank for c in self.components)

    @property
    def irregularity(self):
        """ Σ slope·rank; an integer for consistent ramified data """
        irr = sum((c.irregularity for c in self.components), Fraction(0))
        if irr.denominator != 1:
            raise InvalidRamifiedData(
                "total irregularity {} is not an integer".format(irr))
        return int(irr)

    @property
    def is_regular(self):
        return all(c.is_regular for c in self.components)

    def slopes(self):
        """ Counter slope -> rank carried by components of that slope """
        counts = Counter()
        for c in self.components:
            counts[c.slope] += c.rank
        return counts

    def map(self, func):
        return FormalModule(func(c) for c in self.components)

    def filter(self, predicate):
        return FormalModule(c for c in self.components if predicate(c))


def canonicalize(component):
    """ canonical representative of an elementary module """
    return ElementaryModule(component.f, component.residue, component.r,
                            component.unip)


def slope(component):
    return component.slope


def rank(module):
    return module.rank


def irregularity(module):
    return module.irregularity


def slope_part(module, s):
    """ the sum of the components of slope exactly `s` """
    s = as_rational(s)
    return module.filter(lambda c: c.slope == s)


def tensor_kummer(module, gamma):
    return module.map(lambda c: c.tensor_kummer(gamma))


def dual(module):
    return module.map(lambda c: c.dual())


def end_of(module):
    """
    END(M) = M ⊗ M^∨ for unramified modules.

    Raises
    ------
    UnsupportedRamification
        if a component has r > 1
    """
    if any(c.r != 1 for c in module):
        raise UnsupportedRamification(
            "END is only available for unramified components")
    components = []
    for ci in module:
        for cj in module:
            for size in clebsch_gordan(ci.unip, cj.unip):
                components.append(ElementaryModule(
                    ci.f - cj.f, ci.residue - cj.residue, 1, size))
    return FormalModule(components)


def hor_rank(module):
    """ number of horizontal sections: one per trivial-type block """
    return sum(1 for c in module if c.is_trivial)


def phi_mid_rank(module):
    """ rank of the vanishing cycles of the middle extension, rk M - hor """
    return module.rank - hor_rank(module)


def psi_to_phi(module):
    """
    Φ of the middle extension: every trivial-type block U_m shrinks to
    U_(m-1), blocks of size one disappear.
    """
    components = []
    for c in module:
        if c.is_trivial:
            if c.unip > 1:
                components.append(c.replace(unip=c.unip - 1))
        else:
            components.append(c)
    return FormalModule(components)


def phi_to_psi(phi_module, rank):
    """
    Inverse of `psi_to_phi` given the rank of the nearby cycles: trivial
    blocks U_j grow to U_(j+1), and trivial lines fill the remaining rank.

    Raises
    ------
    InconsistentRank
        if `rank` is too small for `phi_module`
    """
    components = []
    promoted = 0
    for c in phi_module:
        if c.is_trivial:
            components.append(c.replace(unip=c.unip + 1))
            promoted += 1
        else:
            components.append(c)
    deficit = rank - phi_module.rank
    extra = deficit - promoted
    if extra < 0:
        raise InconsistentRank(
            "rank {} cannot carry vanishing cycles of rank {} with {} "
            "trivial blocks".format(rank, phi_module.rank, promoted))
    components.extend(ElementaryModule() for _ in range(extra))
    return FormalModule(components)


def is_isomorphic(first, second):
    return first == second
