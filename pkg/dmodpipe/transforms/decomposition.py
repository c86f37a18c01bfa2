"""
Sorting of modules at infinity by slope and by the leading term of the
derivation.
"""
from collections import defaultdict
from fractions import Fraction

from ..exact import TruncatedPuiseuxSeries, as_rational
from ..formal import ElementaryModule, FormalModule
from ..io.containers import InfinityDecomposition

__all__ = [
    'ell',
    'twist_class',
    'untwist_class',
    'class_label',
    'infinity_decompose',
]


def ell(x, r=1):
    """ ℓ_x, the rank-one module d/dζ + x/ζ² """
    return ElementaryModule(TruncatedPuiseuxSeries({-2: as_rational(x)}, ram=r),
                            r=r)


def twist_class(component, x):
    """ ℓ_x ⊗ component """
    x = as_rational(x)
    if not x:
        return component
    twist = TruncatedPuiseuxSeries({-2: x}, ram=component.r)
    return component.replace(f=component.f + twist)


def untwist_class(component, x):
    """ ℓ_(-x) ⊗ component """
    return twist_class(component, -as_rational(x))


def class_label(component):
    """ the ζ^-2 coefficient of a component of slope <= 1 """
    return component.f.coefficient(-2)


def infinity_decompose(module):
    """
    Split a module at infinity into the part of slope > 1 and, for every
    leading-term class x, the components that become of slope < 1 (or
    regular) after untwisting by ℓ_x.

    Returns
    -------
    InfinityDecomposition
    """
    over1 = []
    classes = defaultdict(list)
    for c in module:
        if c.slope > 1:
            over1.append(c)
        else:
            classes[class_label(c)].append(c)

    result = InfinityDecomposition(over1=FormalModule(over1))
    for x in sorted(classes):
        result.classes[Fraction(x)] = FormalModule(classes[x])
    return result
