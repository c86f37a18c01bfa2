"""
Morphism spaces and isomorphism tests for pairs and quads.
"""
import logging

import numpy as np
from sympy import Matrix, zeros

from ..utils.linalg import is_invertible, is_similar, nullspace
from .functors import phi, psi
from .objects import QuadMorphism

log = logging.getLogger(__name__)

__all__ = ['hom_space', 'pairs_isomorphic', 'quads_isomorphic']


def _commutator_residual(source, target, phi_v, phi_vp):
    """ both square defects, flattened into one column """
    can_defect = phi_vp * source.can - target.can * phi_v
    var_defect = phi_v * source.var - target.var * phi_vp
    return Matrix.vstack(can_defect.reshape(len(can_defect), 1),
                         var_defect.reshape(len(var_defect), 1))


def hom_space(q1, q2):
    """
    All morphisms q1 -> q2.

    The unknowns are the entries of phi_v (dim V2 x dim V1) and
    phi_vp (dim V2' x dim V1'); the commuting squares are linear in them,
    so the morphisms are the kernel of one exact rational system.

    Returns
    -------
    dimension: int
    basis: list of QuadMorphism
    """
    shape_v = (q2.dim_v, q1.dim_v)
    shape_vp = (q2.dim_vp, q1.dim_vp)
    n_v = shape_v[0] * shape_v[1]
    n_vp = shape_vp[0] * shape_vp[1]
    n_unknowns = n_v + n_vp
    if n_unknowns == 0:
        return 0, []

    def unpack(vector):
        phi_v = zeros(*shape_v)
        phi_vp = zeros(*shape_vp)
        for idx in range(n_v):
            phi_v[idx // shape_v[1], idx % shape_v[1]] = vector[idx]
        for idx in range(n_vp):
            phi_vp[idx // shape_vp[1], idx % shape_vp[1]] = vector[n_v + idx]
        return phi_v, phi_vp

    columns = []
    for idx in range(n_unknowns):
        unit = [0] * n_unknowns
        unit[idx] = 1
        columns.append(_commutator_residual(q1, q2, *unpack(unit)))
    system = Matrix.hstack(*columns)

    if system.rows == 0:
        kernel = [Matrix([1 if i == j else 0 for i in range(n_unknowns)])
                  for j in range(n_unknowns)]
    else:
        kernel = nullspace(system)
    basis = [QuadMorphism(*unpack(vector)) for vector in kernel]
    return len(basis), basis


def pairs_isomorphic(p1, p2):
    """ conjugacy of the monodromies over Q """
    return p1.dim == p2.dim and is_similar(p1.rho, p2.rho)


def quads_isomorphic(q1, q2, tries=8, seed=0):
    """
    Decide whether an invertible morphism q1 -> q2 exists.

    A random integer combination of a basis of hom(q1, q2) is invertible
    with high probability if any element is, so a few seeded tries decide
    the question; failing all of them reports False.
    """
    if q1.dims != q2.dims:
        return False
    if not (pairs_isomorphic(psi(q1), psi(q2))
            and pairs_isomorphic(phi(q1), phi(q2))):
        return False
    if q1.dim_v == 0 and q1.dim_vp == 0:
        return True

    dim, basis = hom_space(q1, q2)
    if dim == 0:
        return False

    rng = np.random.RandomState(seed)
    for attempt in range(tries):
        weights = [int(w) for w in rng.randint(-99, 100, size=dim)]
        phi_v = zeros(q2.dim_v, q1.dim_v)
        phi_vp = zeros(q2.dim_vp, q1.dim_vp)
        for w, morphism in zip(weights, basis):
            phi_v += w * morphism.phi_v
            phi_vp += w * morphism.phi_vp
        if is_invertible(phi_v) and is_invertible(phi_vp):
            log.debug("invertible morphism found at attempt {}".format(attempt))
            return True
    log.debug("no invertible morphism among {} random combinations"
              .format(tries))
    return False
