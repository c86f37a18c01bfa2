"""
Global invariants of a middle extension computed from its formal type.
"""
import logging

from ..core.errors import InconsistentType, NoSingularities
from ..formal import phi_mid_rank
from ..io.containers import RigidityContainer
from .formal_type import INFINITY, end_type, trivial_module

log = logging.getLogger(__name__)

__all__ = [
    'local_contribution',
    'euler_char',
    'rigidity_index',
    'rigidity_report',
    'infinity_module',
    'fourier_rank',
    'radon_rank',
]


def local_contribution(psi):
    """ rk Φ + irreg Ψ of the middle extension at a point """
    return phi_mid_rank(psi) + psi.irregularity


def euler_char(ft):
    """
    χ = rk(2 - 2g) - Σ_x w_x (rk Φ_x + irreg Ψ_x).

    Raises
    ------
    InvalidRamifiedData
        if an irregularity is not an integer
    """
    drop = sum(p.weight * local_contribution(p.psi) for p in ft.points)
    return ft.rank * (2 - 2 * ft.genus) - drop


def rigidity_index(ft):
    """
    The Euler characteristic of the middle extension of END.

    Raises
    ------
    UnsupportedRamification
        if a nearby-cycles module is ramified
    """
    rig = euler_char(end_type(ft))
    log.debug("rigidity index %d for rank %d with %d points",
              rig, ft.rank, len(ft.points))
    return rig


def rigidity_report(ft):
    return RigidityContainer(
        rank=ft.rank,
        genus=ft.genus,
        euler_char=euler_char(ft),
        rigidity_index=rigidity_index(ft),
    )


def infinity_module(ft, psi_inf=None):
    """
    Ψ_∞ of a type on the affine line: `psi_inf` when given, else the point
    labelled 'inf', else the trivial module.
    """
    if psi_inf is not None:
        if psi_inf.rank != ft.rank:
            raise InconsistentType("Ψ_∞ has rank {}, the type has rank {}"
                                   .format(psi_inf.rank, ft.rank))
        return psi_inf
    point = ft.point(INFINITY)
    if point is not None:
        return point.psi
    return trivial_module(ft.rank)


def fourier_rank(ft, psi_inf=None):
    """
    rk Four(M) = irreg Ψ_∞^(>1) - rk Ψ_∞^(>1) + Σ_(x finite) w_x (rk Φ_x + irreg Ψ_x)

    Raises
    ------
    InconsistentType
        if the result is negative
    """
    over1 = infinity_module(ft, psi_inf).filter(lambda c: c.slope > 1)
    result = over1.irregularity - over1.rank + sum(
        p.weight * local_contribution(p.psi) for p in ft.finite_points())
    if result < 0:
        raise InconsistentType(
            "the Fourier rank formula gives {} < 0".format(result))
    return result


def radon_rank(ft):
    """
    rk Rad(M) = Σ_x w_x (rk Φ_x + irreg Ψ_x) - rk M on the projective line.

    Raises
    ------
    NoSingularities
        if no point is singular
    InconsistentType
        if the result is negative
    """
    if not ft.singular_points():
        raise NoSingularities("the Radon transform needs a singular point")
    result = sum(p.weight * local_contribution(p.psi) for p in ft.points) \
        - ft.rank
    if result < 0:
        raise InconsistentType(
            "the Radon rank formula gives {} < 0".format(result))
    return result
