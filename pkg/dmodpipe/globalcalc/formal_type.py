"""
Formal types: the nearby cycles of a local system at each of its singular
points, together with its rank and the genus of the curve.
"""
from ..core.errors import InconsistentType
from ..exact import as_rational
from ..formal import FormalModule, end_of, kummer, phi_mid_rank, psi_to_phi

__all__ = [
    'INFINITY',
    'FormalPoint',
    'FormalType',
    'end_type',
    'direct_sum',
    'finite_location',
    'trivial_module',
]

INFINITY = 'inf'


class FormalPoint:
    """
    Parameters
    ----------
    label: str
        name of the point; on the affine line a rational "p/q" or 'inf'
    psi: FormalModule
        nearby cycles Ψ_x
    weight: int
        degree of the residue field of the point
    """
    __slots__ = ('label', 'psi', 'weight')

    def __init__(self, label, psi, weight=1):
        weight = int(weight)
        if weight < 1:
            raise InconsistentType(
                "point {} has weight {} < 1".format(label, weight))
        self.label = str(label)
        self.psi = psi
        self.weight = weight

    @property
    def phi(self):
        return psi_to_phi(self.psi)

    @property
    def is_singular(self):
        return phi_mid_rank(self.psi) > 0 or self.psi.irregularity > 0

    def __eq__(self, other):
        if not isinstance(other, FormalPoint):
            return NotImplemented
        return (self.label, self.psi, self.weight) == \
            (other.label, other.psi, other.weight)

    def __repr__(self):
        weight = "" if self.weight == 1 else ", weight={}".format(self.weight)
        return "FormalPoint({}: {!r}{})".format(self.label, self.psi, weight)


class FormalType:
    """
    Raises
    ------
    InconsistentType
        for repeated labels, a nearby-cycles module of the wrong rank, a
        nonpositive rank or a negative genus
    """
    __slots__ = ('rank', 'points', 'genus')

    def __init__(self, rank, points=(), genus=0):
        rank = int(rank)
        genus = int(genus)
        if rank < 1:
            raise InconsistentType("rank must be positive, got {}".format(rank))
        if genus < 0:
            raise InconsistentType("genus must be ≥ 0, got {}".format(genus))
        points = list(points)
        labels = [p.label for p in points]
        if len(set(labels)) != len(labels):
            raise InconsistentType("repeated point labels in {}".format(labels))
        for p in points:
            if p.psi.rank != rank:
                raise InconsistentType(
                    "Ψ at {} has rank {}, the type has rank {}".format(
                        p.label, p.psi.rank, rank))
        self.rank = rank
        self.points = points
        self.genus = genus

    def point(self, label):
        """ the point called `label`, or None """
        for p in self.points:
            if p.label == label:
                return p
        return None

    @property
    def labels(self):
        return [p.label for p in self.points]

    def singular_points(self):
        return [p for p in self.points if p.is_singular]

    def finite_points(self):
        return [p for p in self.points if p.label != INFINITY]

    def __eq__(self, other):
        if not isinstance(other, FormalType):
            return NotImplemented
        key = lambda ft: (ft.rank, ft.genus,
                          sorted(ft.points, key=lambda p: p.label))
        return key(self) == key(other)

    def __repr__(self):
        return "FormalType(rank={}, genus={}, points={})".format(
            self.rank, self.genus, self.points)


def end_type(ft):
    """
    The formal type of END = L ⊗ L^∨.

    Raises
    ------
    UnsupportedRamification
        if a nearby-cycles module is ramified
    """
    return FormalType(
        rank=ft.rank ** 2,
        points=[FormalPoint(p.label, end_of(p.psi), p.weight)
                for p in ft.points],
        genus=ft.genus,
    )


def direct_sum(first, second):
    """
    L ⊕ L' for formal types on the same curve with the same points.
    """
    if first.genus != second.genus or sorted(first.labels) != sorted(second.labels):
        raise InconsistentType(
            "direct sums need the same genus and the same singular support")
    points = []
    for p in first.points:
        q = second.point(p.label)
        if p.weight != q.weight:
            raise InconsistentType("point {} has weights {} and {}".format(
                p.label, p.weight, q.weight))
        points.append(FormalPoint(p.label, p.psi + q.psi, p.weight))
    return FormalType(first.rank + second.rank, points, first.genus)


def finite_location(point):
    """ the coordinate of a finite point of the affine line """
    try:
        return as_rational(point.label)
    except (ValueError, ZeroDivisionError):
        raise InconsistentType(
            "finite points need rational labels, got '{}'".format(point.label))


def trivial_module(rank):
    """ Ψ of a point where the local system is smooth """
    return FormalModule([kummer(0)] * rank)
