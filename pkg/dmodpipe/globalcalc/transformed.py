"""
Formal types of Fourier and Radon transforms.

Both transforms act on vanishing cycles: the nearby cycles of every point
are turned into Φ with `psi_to_phi`, transformed locally, and turned back
with `phi_to_psi` at the rank given by the global rank formula.
"""
import logging
from collections import Counter
from fractions import Fraction

from ..core.errors import InconsistentType, UseBookkeeping
from ..exact import format_rational
from ..formal import FormalModule, phi_to_psi
from ..io.containers import TransformBookkeeping, TransformedPoint, TransformedType
from ..transforms import (INFINITY_INFINITY, INFINITY_ZERO, ZERO_INFINITY,
                          check_lambda, fourier_bookkeeping,
                          fourier_local_regular, fourier_local_regular_inverse,
                          infinity_decompose, radon_local)
from .formal_type import INFINITY, FormalPoint, FormalType, finite_location
from .formulas import fourier_rank, infinity_module, radon_rank

log = logging.getLogger(__name__)

__all__ = [
    'MIDDLE_EXTENSION_NOTE',
    'BOOKKEEPING_NOTE',
    'fourier_formal_type',
    'radon_formal_type',
    'to_formal_type',
]

MIDDLE_EXTENSION_NOTE = ("assumes M and Four(M) are middle extensions; "
                         "only punctual transforms are detected")
BOOKKEEPING_NOTE = ("irregular or non-rational points: ranks, irregularities "
                    "and slopes only")


def _check_affine(ft):
    if ft.genus != 0:
        raise InconsistentType(
            "the Fourier transform needs the affine line, got genus {}".format(
                ft.genus))


def _fourier_exact(ft, psi_inf, rank_out):
    points = []
    decomposition = infinity_decompose(psi_inf)
    for x, part in decomposition.classes.items():
        phi = fourier_local_regular_inverse(part, x)
        if len(phi):
            points.append(TransformedPoint(
                label=format_rational(x),
                phi=phi,
                psi=phi_to_psi(phi, rank_out),
            ))

    at_infinity = FormalModule()
    for p in ft.finite_points():
        at_infinity += fourier_local_regular(p.phi, finite_location(p))
    if at_infinity.rank != rank_out:
        raise InconsistentType(
            "Ψ_∞ of the transform has rank {}, the rank formula gives {}"
            .format(at_infinity.rank, rank_out))
    points.append(TransformedPoint(label=INFINITY, psi=at_infinity))
    return points


def _merge(records):
    slopes = Counter()
    for record in records:
        slopes.update(record.slopes_out)
    return TransformBookkeeping(
        flavor='assembled',
        rank_out=sum(slopes.values()),
        irr_out=sum((s * m for s, m in slopes.items()), Fraction(0)),
        slopes_out=+slopes,
    )


def _fourier_bookkeeping(ft, psi_inf):
    points = []
    decomposition = infinity_decompose(psi_inf)
    for x, part in decomposition.classes.items():
        record = fourier_bookkeeping(part, INFINITY_ZERO, x)
        if record.rank_out:
            points.append(TransformedPoint(
                label=format_rational(x), bookkeeping=record, exact=False))

    contributions = []
    for p in ft.finite_points():
        record = fourier_bookkeeping(p.phi, ZERO_INFINITY, finite_location(p))
        # a point of degree w stands for w conjugate points
        record.slopes_out = Counter({s: m * p.weight
                                     for s, m in record.slopes_out.items()})
        contributions.append(record)
    if len(decomposition.over1):
        contributions.append(
            fourier_bookkeeping(decomposition.over1, INFINITY_INFINITY))
    points.append(TransformedPoint(label=INFINITY, bookkeeping=_merge(contributions),
                                   exact=False))
    return points


def fourier_formal_type(ft, psi_inf=None):
    """
    The formal type of the Fourier transform of a middle extension on the
    affine line.

    Φ at a finite point x of Four(M) is Four(∞,x) of the class-x part of
    Ψ_∞(M); Ψ_∞ of Four(M) is Four(∞,∞) of the slope > 1 part of Ψ_∞(M)
    plus Four(x,∞)Φ_x(M) over the finite points. Regular types are
    transformed exactly, anything else gets bookkeeping records.

    Parameters
    ----------
    ft: FormalType
        genus 0, finite points labelled by rationals
    psi_inf: FormalModule or None
        Ψ_∞(M); taken from the point 'inf' when None

    Returns
    -------
    TransformedType

    Raises
    ------
    InconsistentType
        if the transform would be punctual or the data is inconsistent
    """
    _check_affine(ft)
    psi_inf = infinity_module(ft, psi_inf)
    finite = ft.finite_points()
    for p in finite:
        finite_location(p)
    rank_out = fourier_rank(ft, psi_inf)
    if rank_out == 0:
        raise InconsistentType("the Fourier transform of this type is punctual")

    exact = psi_inf.is_regular and all(
        p.psi.is_regular and p.weight == 1 for p in finite)
    if exact:
        points = _fourier_exact(ft, psi_inf, rank_out)
        notes = [MIDDLE_EXTENSION_NOTE]
    else:
        points = _fourier_bookkeeping(ft, psi_inf)
        notes = [MIDDLE_EXTENSION_NOTE, BOOKKEEPING_NOTE]
    log.debug("Fourier transform of rank %d in %s mode", rank_out,
              'exact' if exact else 'bookkeeping')

    return TransformedType(
        transform='fourier',
        mode='exact' if exact else 'bookkeeping',
        rank_out=rank_out,
        points_out=points,
        notes=notes,
    )


def radon_formal_type(ft, lam):
    """
    The formal type of the Katz-Radon transform on the projective line:
    Φ_x(Rad M) = Rad(x,x) Φ_x(M) at every singular point.

    Returns
    -------
    TransformedType

    Raises
    ------
    IntegralLambda
        if λ is an integer
    NoSingularities
        if the type has no singular point
    """
    lam = check_lambda(lam)
    if ft.genus != 0:
        raise InconsistentType(
            "the Radon transform needs the projective line, got genus {}"
            .format(ft.genus))
    rank_out = radon_rank(ft)

    points = []
    for p in ft.singular_points():
        phi = radon_local(p.phi, lam)
        points.append(TransformedPoint(
            label=p.label,
            weight=p.weight,
            phi=phi,
            psi=phi_to_psi(phi, rank_out),
        ))
    log.debug("Radon transform for λ = %s has rank %d",
              format_rational(lam), rank_out)

    return TransformedType(
        transform='radon',
        mode='exact',
        rank_out=rank_out,
        points_out=points,
    )


def to_formal_type(transformed, genus=0):
    """
    The formal type of an exact transform.

    Raises
    ------
    UseBookkeeping
        for bookkeeping-mode transforms
    """
    if transformed.mode != 'exact':
        raise UseBookkeeping("a bookkeeping transform has no formal type")
    return FormalType(
        rank=transformed.rank_out,
        points=[FormalPoint(p.label, p.psi, p.weight)
                for p in transformed.points_out],
        genus=genus,
    )
